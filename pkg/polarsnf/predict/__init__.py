#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from polarsnf.predict.base import (BranchRegistry,
                                   Prediction,
                                   ValuationParams,
                                   predict,
                                   predict_critical,
                                   predict_smith,
                                   relevant_primes)
# Make sure predictor branches are registered
import polarsnf.predict.nonnilpotent
import polarsnf.predict.classical
import polarsnf.predict.unitary
