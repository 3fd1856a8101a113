#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for concrete finite groups."""

import numpy as np
import pytest

from pairmult.exceptions import CapExceeded, NonGroup
from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.library import LIBRARY, cyclic, permutation_group
from pairmult.utils.config import Limits

def s3(limits=None):
	return permutation_group(3, [[1, 0, 2], [1, 2, 0]], names=["s", "t"], name="S3", limits=limits)

def test_cyclic_table():
	z5 = cyclic(5)
	assert z5.order == 5
	assert z5.mul(3, 4) == 2
	assert z5.inv(2) == 3
	assert z5.exponent() == 5
	assert z5.is_abelian()

def test_permutation_closure():
	group = s3()
	assert group.order == 6
	assert not group.is_abelian()
	assert sorted(group.element_orders().tolist()) == [1, 2, 2, 2, 3, 3]
	assert group.exponent() == 6

def test_closure_cap():
	with pytest.raises(CapExceeded):
		s3(limits=Limits(max_cayley=4))

def test_word_multiplication_above_cayley_cap():
	right_table = np.array([[1], [2], [3], [0]])
	group = FiniteGroup.from_right_multiplication(right_table, [0, 0, 1, 2], [0, 0, 0, 0],
	                                              limits=Limits(max_cayley=1), generators=[1])
	assert not group.has_table()
	assert group.mul(2, 3) == 1
	assert group.inv(1) == 3
	assert group.exponent() == 4

def test_commutator_and_conjugate_conventions(d4):
	r, s = d4.gen_labels["r"], d4.gen_labels["s"]
	# [x,y] = x^-1 y^-1 x y
	expected = d4.mul(d4.mul(d4.inv(r), d4.inv(s)), d4.mul(r, s))
	assert d4.commutator(r, s) == expected
	assert d4.commutator(r, s) == d4.power(r, 2)
	# x^g = g^-1 x g
	assert d4.conjugate(r, s) == d4.power(r, -1)

def test_power_negative(d4):
	r = d4.gen_labels["r"]
	assert d4.power(r, -1) == d4.inv(r)
	assert d4.power(r, 4) == 0

def test_evaluate_words(d4):
	assert d4.evaluate([("r", 2), ("r", 2)]) == 0
	with pytest.raises(KeyError):
		d4.evaluate([("q", 1)])

def test_non_group_tables():
	with pytest.raises(NonGroup):
		FiniteGroup(table=np.array([[0, 1], [1, 1]]))
	with pytest.raises(NonGroup):
		FiniteGroup(table=np.array([[1, 0], [0, 1]]))

@pytest.mark.parametrize("name, order", [
	("S3", 6), ("D4", 8), ("Q8", 8), ("D8", 16), ("Q16", 16), ("SD16", 16),
	("M16", 16), ("Z4:Z4", 16), ("H27", 27), ("M27", 27), ("E32", 32),
])
def test_library_orders(name, order):
	assert LIBRARY[name](limits=Limits()).order == order
