#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for exponent bounds and the arithmetic behind them."""

import pytest
from sympy import binomial, multiplicity

from pairmult.verify.arithmetic import binomial_divisibility_check, small_class_bound_violations
from pairmult.verify.bounds import bound_formulas, floor_log

@pytest.mark.parametrize("value, base, expected", [
	(0, 2, 0), (1, 2, 0), (2, 2, 1), (7, 2, 2), (8, 2, 3), (26, 3, 2), (27, 3, 3),
])
def test_floor_log(value, base, expected):
	assert floor_log(value, base) == expected

def test_floor_log_base():
	with pytest.raises(ValueError):
		floor_log(4, 1)

def test_bounds_of_a_class_two_pair():
	bounds = bound_formulas(2, 2, 2, 2)
	assert bounds.m == 1
	assert bounds.to_dict() == {"thm27": 8, "ellis": 4, "moravec": 16, "jones": 4}

def test_bounds_below_p():
	# k < p gives m = 0 and the bound p^e
	bounds = bound_formulas(5, 3, 4)
	assert bounds.m == 0
	assert bounds.thm27 == 125
	assert bounds.jones is None

def test_trivial_pair_bounds():
	bounds = bound_formulas(3, 0, 0)
	assert (bounds.m, bounds.thm27, bounds.ellis, bounds.moravec) == (0, 1, 1, 1)

@pytest.mark.parametrize("p, e, k", [(4, 1, 1), (2, -1, 1), (2, 1, -1)])
def test_bad_arguments(p, e, k):
	with pytest.raises(ValueError):
		bound_formulas(p, e, k)

@pytest.mark.parametrize("p", [2, 3, 5])
def test_binomial_divisibility(p):
	assert binomial_divisibility_check(p, 6, 30) == []

def test_binomial_divisibility_at_seven():
	assert binomial_divisibility_check(7, 4, 21) == []

def test_binomial_divisibility_needs_the_log_term():
	# without m, C(2^1, 2) = 1 is not divisible by 2
	assert multiplicity(2, binomial(2, 2)) < 1
	assert binomial_divisibility_check(2, 1, 2) == []

def test_first_bound_never_exceeds_second_below_p():
	assert small_class_bound_violations() == []
	assert small_class_bound_violations(primes=[17, 19], e_max=3) == []
