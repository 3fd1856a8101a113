#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Second homology through the normalized bar resolution."""

from dataclasses import dataclass
import logging
from typing import Dict, Iterator, List, Optional

from pairmult.exceptions import CapExceeded
from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.homomorphism import GroupHom
from pairmult.utils.config import Limits, get_limits
from pairmult.zlinalg.abelian import AbelianStructure, Cokernel

logger = logging.getLogger(__name__)

Chain = Dict[int, int]

@dataclass
class H2Result:
	"""
	H2(G;Z) with an explicit cycle basis.

	C2 has a basis of pairs (g,h) of non-identity elements, the pair
	(g,h) having index (g-1)(|G|-1) + (h-1). cycle_basis[i] represents the
	i-th invariant factor generator of structure.
	"""
	group: FiniteGroup
	structure: AbelianStructure
	cycle_basis: List[Chain]
	cokernel: Cokernel

	def coordinates(self, chain: Chain) -> List[int]:
		"""Return the invariant factor coordinates of a 2-cycle."""
		return self.cokernel.torsion_coordinates(chain)

def pair_index(n: int, g: int, h: int) -> int:
	return (g - 1) * (n - 1) + (h - 1)

def _d3_rows(G: FiniteGroup) -> Iterator[Chain]:
	"""Yield d3(g,h,k) = (h,k) - (gh,k) + (g,hk) - (g,h) for non-identity g, h, k."""
	n = G.order
	table = G.table
	for g in range(1, n):
		for h in range(1, n):
			gh = int(table[g, h])
			for k in range(1, n):
				hk = int(table[h, k])
				row: Chain = {}
				for (x, y), sign in (((h, k), 1), ((gh, k), -1), ((g, hk), 1), ((g, h), -1)):
					if x and y:
						index = pair_index(n, x, y)
						value = row.get(index, 0) + sign
						if value:
							row[index] = value
						else:
							row.pop(index, None)
				if row:
					yield row

def boundary2(G: FiniteGroup, chain: Chain) -> Chain:
	"""Return d2 of a 2-chain, d2(g,h) = [g] - [gh] + [h], [x] having index x-1."""
	n = G.order
	result: Chain = {}
	for index, value in chain.items():
		g, h = index // (n - 1) + 1, index % (n - 1) + 1
		for x, sign in ((g, 1), (G.mul(g, h), -1), (h, 1)):
			if x:
				result[x - 1] = result.get(x - 1, 0) + sign * value
	return {k: v for k, v in result.items() if v}

def h2_bar(G: FiniteGroup, limits: Optional[Limits] = None) -> H2Result:
	"""
	Return H2(G;Z) = ker d2 / im d3.

	C2/im d3 is H2 plus a free part of rank |G|-1, so H2 is its torsion
	and the lifts of the torsion generators are cycles.
	"""
	limits = get_limits(limits)
	n = G.order
	if n > limits.max_bar:
		raise CapExceeded("bar resolution", n, limits.max_bar)
	if n == 1:
		return H2Result(G, AbelianStructure(), [], Cokernel(0, []))
	assert G.has_table(), "bar resolution needs a Cayley table"

	cokernel = Cokernel((n - 1) ** 2, _d3_rows(G))
	assert cokernel.structure.free_rank == n - 1, \
		f"C2/im d3 has free rank {cokernel.structure.free_rank}, expected {n - 1}"

	structure = cokernel.structure.torsion_subgroup()
	cycle_basis = [cokernel.generator_lift(i) for i in range(len(structure.torsion))]

	logger.info("H2(%s) = %s through the bar resolution", G.name, structure)
	return H2Result(G, structure, cycle_basis, cokernel)

def induced_h2(f: GroupHom, src: H2Result, dst: H2Result) -> List[List[int]]:
	"""
	Return the matrix of H2(f) in invariant factor coordinates.

	Rows are the generators of dst, columns those of src. The chain map
	sends (g,h) to (f(g),f(h)), dropping pairs with an identity entry.
	"""
	assert src.group is f.domain and dst.group is f.codomain, "H2 results do not match the homomorphism"

	n_src, n_dst = f.domain.order, f.codomain.order
	columns = []
	for cycle in src.cycle_basis:
		image: Chain = {}
		for index, value in cycle.items():
			g, h = index // (n_src - 1) + 1, index % (n_src - 1) + 1
			fg, fh = int(f.image[g]), int(f.image[h])
			if fg and fh:
				target = pair_index(n_dst, fg, fh)
				image[target] = image.get(target, 0) + value
		columns.append(dst.coordinates({k: v for k, v in image.items() if v}))

	rows = len(dst.structure.torsion)
	return [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
