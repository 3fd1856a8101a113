#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for quotients, products and complements."""

import numpy as np
import pytest

from pairmult.exceptions import CapExceeded, NotAction, NotAutomorphism, NotNilpotent, NotNormal
from pairmult.groups.constructions import (action_from_generators, direct_product, factor_subgroups, find_complement,
                                           is_automorphism, quotient_group, retraction, semidirect_product,
                                           sylow_decomposition)
from pairmult.groups.library import cyclic, metacyclic, permutation_group
from pairmult.groups.pair import Pair
from pairmult.groups.series import center
from pairmult.groups.subgroup import subgroup_generated, trivial_subgroup, whole_group
from pairmult.utils.config import Limits

def test_quotient_by_center(d4):
	Z = center(whole_group(d4))
	quotient, projection = quotient_group(d4, Z)
	assert quotient.order == 4
	assert quotient.is_abelian()
	assert quotient.exponent() == 2
	assert projection.verify(exhaustive=True)
	assert projection.kernel() == Z

def test_quotient_needs_normal(d4):
	with pytest.raises(NotNormal):
		quotient_group(d4, subgroup_generated(d4, [d4.gen_labels["s"]]))

def test_automorphism_detection():
	z3 = cyclic(3)
	assert is_automorphism(z3, [0, 2, 1])
	assert not is_automorphism(z3, [0, 0, 0])
	assert not is_automorphism(z3, [1, 2, 0])

def test_action_extension():
	z3, z2 = cyclic(3), cyclic(2)
	action = action_from_generators(z3, z2, {1: [0, 2, 1]})
	assert action.tolist() == [[0, 1, 2], [0, 2, 1]]

	with pytest.raises(NotAutomorphism):
		action_from_generators(z3, z2, {1: [0, 0, 0]})

def test_action_must_respect_relations():
	# x -> 2x has order 3 on Z7, so it cannot come from Z2
	with pytest.raises(NotAction):
		action_from_generators(cyclic(7), cyclic(2), {1: (2 * np.arange(7)) % 7})

def test_semidirect_product_is_s3():
	s3 = metacyclic(3, 2, 2, "S3")
	assert s3.order == 6
	assert not s3.is_abelian()
	N, K = factor_subgroups(s3)
	assert N.order == 3 and N.is_normal()
	assert K.order == 2 and not K.is_normal()

def test_semidirect_product_cap():
	with pytest.raises(CapExceeded):
		direct_product(cyclic(64), cyclic(128), limits=Limits())

def test_bad_action_shape():
	with pytest.raises(NotAction):
		semidirect_product(cyclic(3), cyclic(2), np.zeros((3, 3)))

def test_direct_product(d4):
	group = direct_product(d4, cyclic(2, label="c"))
	assert group.order == 16
	assert set(group.gen_labels) == {"r", "s", "c"}
	N, K = factor_subgroups(group)
	assert N.order == 8 and K.order == 2
	assert center(whole_group(group)).order == 4

def test_sylow_decomposition(q8):
	group = direct_product(q8, cyclic(3), name="Q8xZ3")
	sylows = sylow_decomposition(group)
	assert [S.order for S in sylows] == [8, 3]

def test_sylow_needs_nilpotent():
	s3 = permutation_group(3, [[1, 0, 2], [1, 2, 0]])
	with pytest.raises(NotNilpotent):
		sylow_decomposition(s3)

def test_find_complement(d4):
	rotations = subgroup_generated(d4, [d4.gen_labels["r"]])
	complement = find_complement(d4, rotations)
	assert complement is not None
	assert complement.order == 2
	assert rotations.intersection(complement).is_trivial()

def test_no_complement(q8):
	assert find_complement(q8, center(whole_group(q8))) is None

def test_complement_edge_cases(d4):
	assert find_complement(d4, whole_group(d4)).is_trivial()
	assert find_complement(d4, trivial_subgroup(d4)).is_whole()

def test_complement_cap(d4):
	rotations = subgroup_generated(d4, [d4.gen_labels["r"]])
	with pytest.raises(CapExceeded):
		find_complement(d4, rotations, limits=Limits(max_complement=4))

def test_retraction(d4):
	N, K = factor_subgroups(d4)
	hom = retraction(Pair(d4, N, K))
	assert hom.codomain.order == 2
	assert hom.kernel() == N

def test_semidirect_convention_round_trip():
	# x -> 2x has order 3 on Z7
	N, K = cyclic(7), cyclic(3)
	action = action_from_generators(N, K, {1: (2 * np.arange(7)) % 7})
	G = semidirect_product(N, K, action, name="Z7:Z3")
	n_sub, k_sub = factor_subgroups(G)
	assert n_sub.is_normal() and not k_sub.is_normal()

	complement = find_complement(G, n_sub)
	assert complement is not None
	assert complement.order == K.order
	assert n_sub.intersection(complement).is_trivial()

	for k in range(K.order):
		k_index = N.order * k
		for n in range(N.order):
			assert G.mul(n, k_index) == n + N.order * k
			# k n k^-1 = phi_k(n)
			assert G.mul(G.mul(k_index, n), G.inv(k_index)) == action[k][n]
			# n^k = k^-1 n k = phi_{k^-1}(n)
			assert G.conjugate(n, k_index) == action[K.inv(k)][n]
