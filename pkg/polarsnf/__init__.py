#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from polarsnf.ffield import construct_field, conjugate, field_norm, quadratic_extension
from polarsnf.polar import PolarFamily, build_graph, enumerate_singular_points, standard_form
from polarsnf.srg import group_orders, is_nilpotent, spectrum, srg_params, verify_srg_identity
from polarsnf.snf import (cokernel,
                          divisor_profile,
                          naive_oracle_snf,
                          smith_normal_form,
                          spanning_tree_count)
from polarsnf.mathlib.numtheory import gaussian_binomial, valuation
from polarsnf.predict import predict_critical, predict_smith, relevant_primes
