#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Finitely generated abelian groups."""

import heapq
import logging
from math import prod
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Union

from sympy import factorint

from pairmult.exceptions import DimensionMismatch
from pairmult.zlinalg.matrix import Row, SparseIntMatrix
from pairmult.zlinalg.smith import smith_normal_form

logger = logging.getLogger(__name__)

# Relation matrices below this size, or denser than this, skip sparse elimination.
DENSE_DIMENSION = 64
DENSE_DENSITY = 0.2

Relations = Union[SparseIntMatrix, Sequence[Mapping[int, int]], Sequence[Sequence[int]]]

class AbelianStructure:
	"""
	Class representing a finitely generated abelian group.

	It is Z_d1 x ... x Z_dt x Z^r with invariant factors d_1 | ... | d_t,
	each at least 2, and free rank r.
	"""
	def __init__(self, torsion: Sequence[int] = (), free_rank: int = 0):
		"""Initialize a structure from invariant factors and a free rank."""
		self.torsion = [int(d) for d in torsion]
		self.free_rank = int(free_rank)

		if self.free_rank < 0:
			raise ValueError("free rank must be nonnegative")
		if any(d < 2 for d in self.torsion):
			raise ValueError(f"invariant factors must be at least 2, got {self.torsion}")
		if any(self.torsion[i + 1] % self.torsion[i] for i in range(len(self.torsion) - 1)):
			raise ValueError(f"invariant factors {self.torsion} do not form a divisibility chain")

	def __str__(self) -> str:
		"""Return the group as a product of cyclic factors, e.g. Z2 x Z4 x Z8."""
		factors = [f"Z{d}" for d in self.torsion]
		if self.free_rank == 1:
			factors.append("Z")
		elif self.free_rank > 1:
			factors.append(f"Z^{self.free_rank}")
		return " x ".join(factors) if factors else "1"

	def __repr__(self) -> str:
		return f"AbelianStructure(torsion={self.torsion}, free_rank={self.free_rank})"

	def __eq__(self, other) -> bool:
		if not isinstance(other, AbelianStructure):
			return NotImplemented
		return self.torsion == other.torsion and self.free_rank == other.free_rank

	def __hash__(self) -> int:
		return hash((tuple(self.torsion), self.free_rank))

	@classmethod
	def from_cyclic_orders(cls, orders: Iterable[int], free_rank: int = 0) -> 'AbelianStructure':
		"""Return the structure of a product of cyclic groups of arbitrary orders (0 is Z)."""
		prime_powers: Dict[int, List[int]] = {}
		for order in orders:
			order = int(order)
			if order == 0:
				free_rank += 1
				continue
			if order < 0:
				raise ValueError("cyclic orders must be nonnegative")
			for p, k in factorint(order).items():
				prime_powers.setdefault(int(p), []).append(int(p) ** int(k))

		length = max((len(powers) for powers in prime_powers.values()), default=0)
		torsion = [1] * length
		for powers in prime_powers.values():
			powers.sort(reverse=True)
			for i, q in enumerate(powers):
				torsion[length - 1 - i] *= q
		return cls(torsion, free_rank)

	@property
	def invariants(self) -> List[int]:
		return list(self.torsion)

	def order(self) -> int:
		if self.free_rank:
			raise ValueError(f"{self} is infinite")
		return prod(self.torsion)

	def exponent(self) -> int:
		"""Return the largest invariant factor, 1 for the trivial group."""
		return self.torsion[-1] if self.torsion else 1

	def is_trivial(self) -> bool:
		return not self.torsion and not self.free_rank

	def torsion_subgroup(self) -> 'AbelianStructure':
		return AbelianStructure(self.torsion)

	def direct_sum(self, other: 'AbelianStructure') -> 'AbelianStructure':
		return AbelianStructure.from_cyclic_orders(self.torsion + other.torsion, self.free_rank + other.free_rank)

	def generator_orders(self) -> List[int]:
		"""Return the order of each generator, torsion first, 0 for free ones."""
		return self.torsion + [0] * self.free_rank

	def to_dict(self) -> dict:
		return {"torsion": list(self.torsion), "free_rank": self.free_rank}

	@classmethod
	def from_dict(cls, document: Mapping) -> 'AbelianStructure':
		return cls(document.get("torsion", []), document.get("free_rank", 0))

class Cokernel:
	"""
	Class representing Z^cols modulo the row span of a relation matrix.

	Relations with a unit coefficient are used to eliminate a column each,
	in the order they are met. The leftover relations, rewritten on the
	surviving columns, go through a dense Smith normal form whose column
	transform gives coordinates in invariant factor form.
	"""
	def __init__(self, cols: int, relations: Iterable[Mapping[int, int]]):
		"""Initialize a cokernel, eliminating as the relations stream in."""
		self.cols = cols
		self.pivots: Dict[int, Row] = {}
		self.pivot_order: Dict[int, int] = {}
		hard: List[Row] = []

		count = 0
		for relation in relations:
			count += 1
			row = {c: v for c, v in relation.items() if v}
			if any(not 0 <= c < cols for c in row):
				raise DimensionMismatch(f"relation uses a column outside 0..{cols - 1}")
			self._reduce(row)
			if not row:
				continue

			units = [c for c, v in row.items() if v in (1, -1)]
			if units:
				c = max(units)
				if row[c] == -1:
					row = {j: -v for j, v in row.items()}
				self.pivot_order[c] = len(self.pivots)
				self.pivots[c] = row
			else:
				hard.append(row)

		self.free_columns = [c for c in range(cols) if c not in self.pivots]
		position = {c: i for i, c in enumerate(self.free_columns)}

		residual = set()
		for row in hard:
			self._reduce(row)
			if row:
				residual.add(tuple(sorted((position[c], v) for c, v in row.items())))

		dense = []
		for row in sorted(residual):
			values = [0] * len(self.free_columns)
			for i, v in row:
				values[i] = v
			dense.append(values)

		logger.debug("cokernel of %d relations on %d columns: %d eliminated, %dx%d dense residue",
		             count, cols, len(self.pivots), len(dense), len(self.free_columns))

		width = len(self.free_columns)
		if dense:
			form = smith_normal_form(dense, transforms=True, left=False)
			diagonal = form.diagonal + [0] * (width - len(form.diagonal))
			self.V, self.V_inv = form.V, form.V_inv
		else:
			diagonal = [0] * width
			self.V = [[1 if i == j else 0 for j in range(width)] for i in range(width)]
			self.V_inv = [row[:] for row in self.V]

		self.diagonal = diagonal
		self.torsion_positions = [i for i, d in enumerate(diagonal) if d > 1]
		self.free_positions = [i for i, d in enumerate(diagonal) if d == 0]
		self.structure = AbelianStructure([diagonal[i] for i in self.torsion_positions], len(self.free_positions))

	def __str__(self) -> str:
		"""Return a string representation of the cokernel."""
		return f"Cokernel({self.structure})"

	def _reduce(self, row: Row):
		"""Eliminate every pivot column from row, oldest pivot first."""
		heap = [(self.pivot_order[c], c) for c in row if c in self.pivots]
		heapq.heapify(heap)
		while heap:
			_, c = heapq.heappop(heap)
			factor = row.get(c)
			if not factor:
				continue
			for j, v in self.pivots[c].items():
				value = row.get(j, 0) - factor * v
				if value:
					if j not in row and j in self.pivots:
						heapq.heappush(heap, (self.pivot_order[j], j))
					row[j] = value
				else:
					row.pop(j, None)

	def coordinates(self, vector: Mapping[int, int]) -> List[int]:
		"""Return the coordinates of a vector in the invariant factor basis, torsion reduced."""
		row = {c: v for c, v in vector.items() if v}
		self._reduce(row)
		position = {c: i for i, c in enumerate(self.free_columns)}
		width = len(self.free_columns)

		coordinates = [0] * width
		for c, v in row.items():
			i = position[c]
			for j, w in enumerate(self.V[i]):
				if w:
					coordinates[j] += v * w
		for i, d in enumerate(self.diagonal):
			if d:
				coordinates[i] %= d
		return coordinates

	def torsion_coordinates(self, vector: Mapping[int, int]) -> List[int]:
		"""Return the coordinates along the torsion generators only."""
		coordinates = self.coordinates(vector)
		return [coordinates[i] for i in self.torsion_positions]

	def generator_lift(self, i: int) -> Dict[int, int]:
		"""Return a vector of Z^cols representing the i-th torsion generator."""
		values = self.V_inv[self.torsion_positions[i]]
		return {self.free_columns[j]: v for j, v in enumerate(values) if v}

def _as_rows(relations: Relations, gens: int) -> List[Dict[int, int]]:
	if isinstance(relations, SparseIntMatrix):
		if relations.cols != gens:
			raise DimensionMismatch(f"relation matrix has {relations.cols} columns, expected {gens}")
		return relations.row_dicts()

	rows = []
	for relation in relations:
		if isinstance(relation, Mapping):
			rows.append({int(c): int(v) for c, v in relation.items() if v})
		else:
			if len(relation) != gens:
				raise DimensionMismatch(f"relation has {len(relation)} entries, expected {gens}")
			rows.append({c: int(v) for c, v in enumerate(relation) if v})
	return rows

def abelian_from_relations(gens: int, relations: Relations) -> AbelianStructure:
	"""Return the structure of Z^gens modulo the row span of relations."""
	rows = _as_rows(relations, gens)
	nonzero = sum(len(row) for row in rows)
	cells = len(rows) * gens

	if min(len(rows), gens) < DENSE_DIMENSION or (cells and nonzero / cells > DENSE_DENSITY):
		dense = []
		for row in rows:
			values = [0] * gens
			for c, v in row.items():
				if not 0 <= c < gens:
					raise DimensionMismatch(f"relation uses column {c} outside 0..{gens - 1}")
				values[c] = v
			dense.append(values)
		if not dense:
			return AbelianStructure([], gens)
		form = smith_normal_form(dense, transforms=False)
		return AbelianStructure([d for d in form.invariants if d > 1], gens - form.rank)

	return Cokernel(gens, rows).structure

def integer_kernel(matrix: Sequence[Sequence[int]], rows: Optional[int] = None) -> List[List[int]]:
	"""
	Return a basis of the left kernel {z : z * matrix = 0} over the integers.

	rows gives the row count when the matrix has no columns.
	"""
	matrix = [list(row) for row in matrix]
	m = len(matrix) if rows is None else rows
	if not matrix:
		matrix = [[] for _ in range(m)]

	form = smith_normal_form(matrix, transforms=True)
	return [list(form.U[i]) for i in range(form.rank, m)]

def abelian_hom_kernel(domain: AbelianStructure, codomain: AbelianStructure,
                       matrix: Sequence[Sequence[int]]) -> AbelianStructure:
	"""
	Return the kernel of a homomorphism between abelian groups.

	matrix has one row per codomain generator and one column per domain
	generator (torsion generators first, then free ones); column j is the
	image of the j-th domain generator.
	"""
	source = domain.generator_orders()
	target = codomain.generator_orders()
	s, t = len(source), len(target)

	if len(matrix) != t or any(len(row) != s for row in matrix):
		raise DimensionMismatch(f"homomorphism matrix must be {t}x{s}")

	# (x, y) with M x = D y, the x part spans the preimage of 0 in Z^s
	stacked = [[matrix[i][j] for i in range(t)] for j in range(s)]
	stacked += [[-target[i] if k == i else 0 for k in range(t)] for i in range(t)]
	lattice = [row[:s] for row in integer_kernel(stacked, rows=s + t) if any(row[:s])]
	if not lattice:
		return AbelianStructure()

	# relations among the lattice generators: z * B in the span of the domain relations
	r = len(lattice)
	stacked = [list(row) for row in lattice]
	stacked += [[-source[j] if k == j else 0 for k in range(s)] for j in range(s)]
	relations = [row[:r] for row in integer_kernel(stacked, rows=r + s)]
	return abelian_from_relations(r, [row for row in relations if any(row)])
