#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for power subgroups and powerful embeddings."""

import pytest

from pairmult.exceptions import NotPGroup
from pairmult.groups.library import abelian, permutation_group
from pairmult.groups.powers import (agemo, group_prime, is_p_subgroup, power_set, powerful_embedding_check,
                                    powerfully_embedded)
from pairmult.groups.series import center
from pairmult.groups.subgroup import subgroup_generated, whole_group

def test_group_prime():
	assert group_prime(1) is None
	assert group_prime(8) == 2
	assert group_prime(243) == 3
	with pytest.raises(NotPGroup):
		group_prime(12)

def test_agemo(d4, q8):
	assert agemo(whole_group(d4), 1, 2).order == 2
	assert agemo(whole_group(d4), 2, 2).is_trivial()
	assert agemo(whole_group(q8), 1, 2).order == 2
	assert agemo(whole_group(q8), 0, 2).is_whole()

def test_power_set_of_z2z4(z2z4):
	squares = power_set(whole_group(z2z4), 1, 2)
	assert squares.tolist() == [0, 4]

def test_agemo_needs_p_group():
	s3 = permutation_group(3, [[1, 0, 2], [1, 2, 0]])
	assert not is_p_subgroup(whole_group(s3), 2)
	with pytest.raises(NotPGroup):
		agemo(whole_group(s3), 1, 2)

def test_powerful_embeddings(d4, h27):
	assert not powerfully_embedded(whole_group(d4), d4, 2)
	assert powerfully_embedded(center(whole_group(d4)), d4, 2)
	assert not powerfully_embedded(whole_group(h27), h27, 3)

	rotations = subgroup_generated(d4, [d4.gen_labels["r"]])
	flags = powerful_embedding_check(rotations, d4, 2)
	assert not flags.powerfully_embedded
	assert flags.powerful

def test_abelian_groups_are_powerful():
	z4z4 = abelian([4, 4])
	flags = powerful_embedding_check(whole_group(z4z4), z4z4, 2)
	assert flags.powerfully_embedded and flags.powerful

def test_powerful_check_needs_p_group():
	s3 = permutation_group(3, [[1, 0, 2], [1, 2, 0]])
	with pytest.raises(NotPGroup):
		powerful_embedding_check(whole_group(s3), s3, 3)
