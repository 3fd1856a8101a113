#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for the standard groups."""

import pytest

from pairmult.exceptions import PcSyntaxError
from pairmult.groups.library import (abelian, cyclic, extraspecial32, m27, metacyclic, modular16, permutation_group,
                                     quaternion, semidihedral16, subgroup_from_text, z4_semidirect_z4)
from pairmult.groups.series import center, nilpotency_class
from pairmult.groups.subgroup import commutator_subgroup, whole_group

def derived_order(G):
	return commutator_subgroup(whole_group(G), whole_group(G)).order

@pytest.mark.parametrize("build, exponent, klass, center_order", [
	(lambda: quaternion(8), 4, 2, 2),
	(lambda: quaternion(16), 8, 3, 2),
	(semidihedral16, 8, 3, 2),
	(modular16, 8, 2, 4),
	(z4_semidirect_z4, 4, 2, 4),
	(m27, 9, 2, 3),
	(extraspecial32, 4, 2, 2),
])
def test_group_invariants(build, exponent, klass, center_order):
	G = build()
	assert G.exponent() == exponent
	assert nilpotency_class(G) == klass
	assert center(whole_group(G)).order == center_order

def test_extraspecial_groups(h27):
	for G in (h27, extraspecial32(), m27()):
		assert derived_order(G) == center(whole_group(G)).order

def test_abelian_indexing():
	G = abelian([2, 4])
	assert G.order == 8
	assert G.gen_labels == {"a1": 1, "a2": 2}
	assert G.name == "Z2xZ4"
	assert abelian([]).order == 1

def test_bad_arguments():
	with pytest.raises(ValueError):
		cyclic(0)
	with pytest.raises(ValueError):
		quaternion(12)
	with pytest.raises(ValueError):
		metacyclic(8, 2, 2, "bad")
	with pytest.raises(ValueError):
		permutation_group(3, [[0, 0, 1]])

def test_subgroup_from_text(d4, q8):
	assert subgroup_from_text(d4, "r").order == 4
	assert subgroup_from_text(d4, "r^2 s").order == 4
	assert subgroup_from_text(q8, "x^2").order == 2
	assert subgroup_from_text(d4, "1").is_trivial()

def test_subgroup_from_text_errors(d4):
	with pytest.raises(PcSyntaxError):
		subgroup_from_text(d4, "q")
	S3 = permutation_group(3, [[1, 0, 2], [1, 2, 0]])
	with pytest.raises(ValueError):
		subgroup_from_text(S3, "s")
