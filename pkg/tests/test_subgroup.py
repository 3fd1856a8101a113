#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for subgroups and their closures."""

import numpy as np

from pairmult.groups.subgroup import (Subgroup, all_commutators, commutator_subgroup, normal_closure,
                                      subgroup_generated, subgroup_product, trivial_subgroup, whole_group)

def test_generated_subgroups(d4):
	r, s = d4.gen_labels["r"], d4.gen_labels["s"]
	rotations = subgroup_generated(d4, [r])
	assert rotations.order == 4
	assert rotations.is_normal()
	assert rotations.is_abelian()

	reflection = subgroup_generated(d4, [s])
	assert reflection.order == 2
	assert not reflection.is_normal()
	assert rotations.intersection(reflection).is_trivial()
	assert subgroup_product(rotations, reflection).is_whole()

def test_membership_and_equality(d4):
	r = d4.gen_labels["r"]
	rotations = subgroup_generated(d4, [r])
	assert r in rotations
	assert d4.gen_labels["s"] not in rotations
	assert rotations == Subgroup(d4, [0, 1, 2, 3])
	assert trivial_subgroup(d4).issubset(rotations)
	assert rotations.issubset(whole_group(d4))

def test_normal_closure_of_reflection(d4):
	s = d4.gen_labels["s"]
	closure = normal_closure(d4, [s])
	assert closure.order == 4
	assert closure.is_normal()
	assert d4.power(d4.gen_labels["r"], 2) in closure

def test_derived_subgroup(d4, q8):
	for group in (d4, q8):
		derived = commutator_subgroup(whole_group(group), whole_group(group))
		assert derived.order == 2

def test_commutators_with_non_normal_subgroups(d4):
	reflection = subgroup_generated(d4, [d4.gen_labels["s"]])
	derived = commutator_subgroup(reflection, whole_group(d4))
	assert derived.order == 2
	assert set(all_commutators(reflection, whole_group(d4)).tolist()) == {0, 2}

def test_as_group_reindexes(d4):
	rotations = subgroup_generated(d4, [d4.gen_labels["r"]])
	group, embedding = rotations.as_group(name="C4")
	assert group.order == 4
	assert group.is_abelian()
	assert group.exponent() == 4
	assert embedding.verify(exhaustive=True)
	assert np.array_equal(embedding.image, rotations.members)
	assert "r" in group.gen_labels

def test_exponent_of_subgroup(z2z4):
	assert whole_group(z2z4).exponent() == 4
	assert trivial_subgroup(z2z4).exponent() == 1
