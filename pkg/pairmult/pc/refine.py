#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""pc presentations read off concrete solvable groups."""

import logging
from typing import List, Tuple

import numpy as np

from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.series import derived_series, is_nilpotent, lower_central_series
from pairmult.groups.subgroup import Subgroup, subgroup_generated
from pairmult.pc.pcgroup import radices
from pairmult.pc.presentation import PcPresentation

logger = logging.getLogger(__name__)

def _refine_step(top: Subgroup, bottom: Subgroup) -> List[Tuple[int, int]]:
	"""
	Return (generator, prime) pairs refining top > bottom to prime steps.

	top/bottom must be abelian. Steps are listed from top to bottom.
	"""
	G = top.parent
	steps: List[Tuple[int, int]] = []
	current = bottom
	while current.order < top.order:
		x = int(top.members[~current.mask[top.members]][0])
		power, relative = x, 1
		while not current.mask[power]:
			power = G.mul(power, x)
			relative += 1

		p = _smallest_prime(relative)
		y = G.power(x, relative // p)
		steps.append((y, p))
		current = subgroup_generated(G, list(current.generators) + [y])

	steps.reverse()
	return steps

def _smallest_prime(value: int) -> int:
	p = 2
	while value % p:
		p += 1
	return p

def pc_presentation_from_group(G: FiniteGroup, prefix: str = "g") -> Tuple[PcPresentation, np.ndarray]:
	"""
	Read a pc presentation with prime relative orders off a solvable group.

	The lower central series (the derived series if G is not nilpotent) is
	refined to steps of prime index. Returns the presentation together with
	the element of G for every rank of the presentation.
	"""
	series = lower_central_series(G) if is_nilpotent(G) else derived_series(G)

	pcgs: List[int] = []
	orders: List[int] = []
	for top, bottom in zip(series, series[1:]):
		for y, p in _refine_step(top, bottom):
			pcgs.append(y)
			orders.append(p)

	n = len(pcgs)
	names = [f"{prefix}{i + 1}" for i in range(n)]

	# tails[i] is the subgroup <g_{i+1}, ..., g_n> as a membership mask
	tails = [subgroup_generated(G, pcgs[i:]).mask for i in range(n)]
	tails.append(np.eye(1, G.order, dtype=bool).ravel())

	exponents = np.zeros((G.order, n), dtype=np.int64)
	current = G.elements()
	for i in range(n):
		found = np.zeros(G.order, dtype=bool)
		reduced = current.copy()
		for e in range(orders[i]):
			candidate = G.mul_array(G.power(pcgs[i], -e), current)
			hit = ~found & tails[i + 1][candidate]
			exponents[hit, i] = e
			reduced[hit] = candidate[hit]
			found |= hit
		assert found.all(), "pc sequence does not cover the group"
		current = reduced

	def normal(x: int) -> Tuple[int, ...]:
		return tuple(int(e) for e in exponents[x])

	powers = {i: normal(G.power(pcgs[i], orders[i])) for i in range(n)}
	commutators = {
		(j, i): normal(G.commutator(pcgs[j], pcgs[i]))
		for i in range(n) for j in range(i + 1, n)
	}
	presentation = PcPresentation(names, orders, powers, commutators)

	places = np.asarray(radices(presentation), dtype=np.int64)
	by_rank = np.empty(G.order, dtype=np.int64)
	by_rank[exponents @ places] = G.elements()

	logger.debug("pc presentation of %s with relative orders %s", G.name, orders)
	return presentation, by_rank
