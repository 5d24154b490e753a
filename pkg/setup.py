#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="polar-snf",
    version="0.1.0",
    description="Exact Smith groups and critical groups of finite classical polar graphs.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["test", "test.*"]),
    install_requires=['numpy',
                      'sympy',
                      'galois',
                      'pandas',
                      'networkx',
                      ],
    extras_require={'test': ['pytest', 'pytest-cov']},
    entry_points={
        'console_scripts': ['polar-snf = polarsnf.cli:main'],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics"
    ],
    keywords="smith normal form, critical group, sandpile group, polar graph, strongly regular graph",
    license="MIT License",
    python_requires='>=3.8',
    platforms=["Any."],
)
