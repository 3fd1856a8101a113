#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Central and derived series."""

import logging
from typing import List

import numpy as np

from pairmult.exceptions import NotNilpotent, NotNormal, NotSolvable
from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.pair import Pair
from pairmult.groups.subgroup import Subgroup, commutator_subgroup, trivial_subgroup, whole_group

logger = logging.getLogger(__name__)

def pair_lower_central_series(pair: Pair) -> List[Subgroup]:
	"""
	Return [N,G], [N,G,G], ... down to the trivial subgroup.

	The first entry is gamma_2(N,G) and the last one is trivial.
	"""
	if not pair.n_sub.is_normal():
		raise NotNormal("N is not normal in G")

	G = whole_group(pair.group)
	series = [commutator_subgroup(pair.n_sub, G)]
	while not series[-1].is_trivial():
		term = commutator_subgroup(series[-1], G)
		if term == series[-1]:
			raise NotNilpotent(f"pair series of {pair.group.name} stops at order {term.order}")
		series.append(term)

	logger.debug("pair series orders %s", [term.order for term in series])
	return series

def pair_class(pair: Pair) -> int:
	"""Return the class of the pair, 0 when N is trivial."""
	if pair.n_sub.is_trivial():
		return 0
	return len(pair_lower_central_series(pair))

def lower_central_series(G: FiniteGroup) -> List[Subgroup]:
	"""Return G, [G,G], [G,G,G], ... until the series stabilises."""
	whole = whole_group(G)
	series = [whole]
	while True:
		term = commutator_subgroup(series[-1], whole)
		if term == series[-1]:
			break
		series.append(term)
	return series

def nilpotency_class(G: FiniteGroup) -> int:
	series = lower_central_series(G)
	if not series[-1].is_trivial():
		raise NotNilpotent(f"{G.name} is not nilpotent")
	return len(series) - 1

def is_nilpotent(G: FiniteGroup) -> bool:
	return lower_central_series(G)[-1].is_trivial()

def derived_series(G: FiniteGroup) -> List[Subgroup]:
	"""Return G, G', G'', ... down to the trivial subgroup."""
	series = [whole_group(G)]
	while not series[-1].is_trivial():
		term = commutator_subgroup(series[-1], series[-1])
		if term == series[-1]:
			raise NotSolvable(f"derived series of {G.name} stops at order {term.order}")
		series.append(term)
	return series

def upper_central_series(H: Subgroup) -> List[Subgroup]:
	"""
	Return Z_0(H) = 1, Z_1(H), Z_2(H), ... until the series stabilises.

	Z_{i+1}(H) consists of the x in H with [x,h] in Z_i(H) for every h in H.
	"""
	G = H.parent
	gens = np.asarray(H.generators, dtype=np.int64)
	series = [trivial_subgroup(G)]
	while True:
		if gens.size == 0:
			break
		commutators = G.commutator_array(H.members[:, None], gens[None, :])
		term = Subgroup(G, H.members[series[-1].mask[commutators].all(axis=1)])
		if term == series[-1]:
			break
		series.append(term)
	return series

def center(H: Subgroup) -> Subgroup:
	series = upper_central_series(H)
	return series[1] if len(series) > 1 else series[0]

def relative_center_series(M: Subgroup, G: FiniteGroup, n: int) -> List[Subgroup]:
	"""
	Return [Z_1(M,G), ..., Z_n(M,G)] under the conjugation action.

	Z_i(M,G) is the set of m in M with [m,g_1,...,g_i] = 1 for all g_j in G,
	that is M intersected with the i-th term of the upper central series of G.
	"""
	if n < 1:
		raise ValueError("n must be positive")
	if M.parent is not G:
		raise ValueError("M is not a subgroup of G")

	upper = upper_central_series(whole_group(G))
	return [M.intersection(upper[min(i, len(upper) - 1)]) for i in range(1, n + 1)]
