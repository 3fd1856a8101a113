#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for central series and pair classes."""

import pytest

from pairmult.exceptions import NotNilpotent
from pairmult.groups.constructions import factor_subgroups
from pairmult.groups.library import dihedral, permutation_group, quaternion
from pairmult.groups.pair import Pair
from pairmult.groups.series import (center, derived_series, is_nilpotent, lower_central_series, nilpotency_class,
                                    pair_class, pair_lower_central_series, relative_center_series,
                                    upper_central_series)
from pairmult.groups.subgroup import subgroup_generated, trivial_subgroup, whole_group

def s3():
	return permutation_group(3, [[1, 0, 2], [1, 2, 0]], name="S3")

def test_nilpotency_classes(d4, q8, h27, z2z4):
	assert nilpotency_class(d4) == 2
	assert nilpotency_class(q8) == 2
	assert nilpotency_class(h27) == 2
	assert nilpotency_class(z2z4) == 1
	assert nilpotency_class(dihedral(8)) == 3
	assert nilpotency_class(quaternion(16)) == 3

def test_lower_central_series(d4):
	assert [term.order for term in lower_central_series(d4)] == [8, 2, 1]

def test_s3_is_not_nilpotent():
	group = s3()
	assert not is_nilpotent(group)
	with pytest.raises(NotNilpotent):
		nilpotency_class(group)
	assert [term.order for term in derived_series(group)] == [6, 3, 1]

def test_pair_series_of_rotations(d4):
	N, K = factor_subgroups(d4)
	pair = Pair(d4, N, K)
	assert [term.order for term in pair_lower_central_series(pair)] == [2, 1]
	assert pair_class(pair) == 2

def test_pair_class_edge_cases(d4):
	assert pair_class(Pair(d4, trivial_subgroup(d4))) == 0
	assert pair_class(Pair(d4, center(whole_group(d4)))) == 1
	assert pair_class(Pair(d4, whole_group(d4))) == nilpotency_class(d4)

def test_pair_series_not_nilpotent():
	group = s3()
	a3 = subgroup_generated(group, [x for x in range(group.order) if group.element_orders()[x] == 3])
	with pytest.raises(NotNilpotent):
		pair_lower_central_series(Pair(group, a3))

def test_upper_central_series(d4):
	assert [term.order for term in upper_central_series(whole_group(d4))] == [1, 2, 8]
	assert center(whole_group(d4)).order == 2

def test_relative_center_series(d4):
	rotations = subgroup_generated(d4, [d4.gen_labels["r"]])
	series = relative_center_series(rotations, d4, 2)
	assert [term.order for term in series] == [2, 4]
