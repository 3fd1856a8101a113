#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for multipliers of groups and split pairs."""

import pytest

from pairmult.exceptions import CapExceeded, NoComplement
from pairmult.groups.constructions import direct_product, factor_subgroups
from pairmult.groups.library import abelian, cyclic
from pairmult.groups.pair import Pair
from pairmult.groups.series import center
from pairmult.groups.subgroup import trivial_subgroup, whole_group
from pairmult.multiplier.pair import (BACKEND_BAR, BACKEND_PC, BACKEND_SPLIT_SUM, pair_multiplier,
                                      schur_multiplier)
from pairmult.utils.config import Limits
from pairmult.zlinalg.abelian import AbelianStructure

def factor_pair(G):
	N, K = factor_subgroups(G)
	return Pair(G, N, K)

@pytest.mark.parametrize("backend", ["auto", "bar", "pc"])
def test_backends_agree(backend, d4, q8, z2z4):
	assert schur_multiplier(d4, backend=backend).structure == AbelianStructure([2])
	assert schur_multiplier(q8, backend=backend).structure.is_trivial()
	assert schur_multiplier(z2z4, backend=backend).structure == AbelianStructure([2])

def test_backend_choice(d4, h27):
	assert schur_multiplier(d4).backend == BACKEND_BAR
	result = schur_multiplier(h27, limits=Limits(max_bar=16))
	assert result.backend == BACKEND_PC
	assert result.structure == AbelianStructure([3, 3])
	assert result.exponent == 3

def test_unknown_backend(d4):
	with pytest.raises(ValueError):
		schur_multiplier(d4, backend="magic")

def test_split_pairs(d4, z2z4):
	assert pair_multiplier(factor_pair(d4)).structure == AbelianStructure([2])
	assert pair_multiplier(factor_pair(z2z4)).structure == AbelianStructure([2])
	assert pair_multiplier(factor_pair(abelian([2, 2]))).structure == AbelianStructure([2])

def test_complement_is_found(d4):
	N, _ = factor_subgroups(d4)
	result = pair_multiplier(Pair(d4, N))
	assert result.structure == AbelianStructure([2])
	assert result.backend == BACKEND_BAR

def test_direct_factor_with_two_generators(d4):
	G = direct_product(d4, cyclic(2, label="c"))
	assert pair_multiplier(factor_pair(G)).structure == AbelianStructure([2, 2, 2])

def test_whole_and_trivial(d4):
	assert pair_multiplier(Pair(d4, whole_group(d4))) == schur_multiplier(d4)
	result = pair_multiplier(Pair(d4, trivial_subgroup(d4)))
	assert result.structure.is_trivial()
	assert result.backend == BACKEND_SPLIT_SUM

def test_no_complement(q8):
	with pytest.raises(NoComplement):
		pair_multiplier(Pair(q8, center(whole_group(q8))))

def test_beyond_bar_cap_with_trivial_m_k(d4):
	result = pair_multiplier(factor_pair(d4), limits=Limits(max_bar=4))
	assert result.structure == AbelianStructure([2])
	assert result.backend == BACKEND_SPLIT_SUM

def test_beyond_bar_cap_with_nontrivial_m_k():
	G = direct_product(cyclic(2, label="c"), abelian([2, 2]))
	with pytest.raises(CapExceeded):
		pair_multiplier(factor_pair(G), limits=Limits(max_bar=4))

def test_to_dict(d4):
	document = schur_multiplier(d4).to_dict()
	assert document == {"torsion": [2], "free_rank": 0, "exponent": 2, "backend": BACKEND_BAR}
