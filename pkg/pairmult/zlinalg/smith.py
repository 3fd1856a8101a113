#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Smith normal form over the integers."""

from dataclasses import dataclass
import logging
from typing import List, Optional, Sequence, Tuple, Union

from sympy import Matrix

from pairmult.zlinalg.matrix import SparseIntMatrix

logger = logging.getLogger(__name__)

Dense = List[List[int]]

@dataclass
class SmithForm:
	"""
	Result of a Smith normal form computation.

	U * A * V = D with D diagonal, d_1 | d_2 | ... and the zero entries last.
	V_inv is the inverse of V. The transforms are None when not requested.
	"""
	diagonal: List[int]
	rows: int
	cols: int
	U: Optional[Dense] = None
	V: Optional[Dense] = None
	V_inv: Optional[Dense] = None

	@property
	def invariants(self) -> List[int]:
		"""Return the nonzero diagonal entries."""
		return [d for d in self.diagonal if d]

	@property
	def rank(self) -> int:
		return len(self.invariants)

	def D(self) -> Dense:
		dense = [[0] * self.cols for _ in range(self.rows)]
		for i, d in enumerate(self.diagonal):
			dense[i][i] = d
		return dense

def identity(size: int) -> Dense:
	return [[1 if i == j else 0 for j in range(size)] for i in range(size)]

def matmul(a: Dense, b: Dense, inner: Optional[int] = None) -> Dense:
	"""Multiply dense integer matrices."""
	if inner is None:
		inner = len(b)
	cols = len(b[0]) if b else 0
	result = [[0] * cols for _ in range(len(a))]
	for i, row in enumerate(a):
		out = result[i]
		for k in range(inner):
			value = row[k]
			if value:
				for j, other in enumerate(b[k]):
					if other:
						out[j] += value * other
	return result

def smith_normal_form(matrix: Union[SparseIntMatrix, Sequence[Sequence[int]]],
                      transforms: bool = True, left: bool = True) -> SmithForm:
	"""
	Compute the Smith normal form of an integer matrix.

	The pivot is the nonzero entry of least absolute value (ties broken by
	lowest row, then lowest column). Row operations are mirrored on U,
	column operations on V and, inversely, on V_inv. With left=False only
	the column transforms are kept.
	"""
	if isinstance(matrix, SparseIntMatrix):
		m, n = matrix.rows, matrix.cols
		a = matrix.to_dense()
	else:
		a = [[int(value) for value in row] for row in matrix]
		m = len(a)
		n = len(a[0]) if m else 0

	U = identity(m) if transforms and left else None
	V = identity(n) if transforms else None
	V_inv = identity(n) if transforms else None

	def swap_rows(i: int, j: int):
		a[i], a[j] = a[j], a[i]
		if U is not None:
			U[i], U[j] = U[j], U[i]

	def swap_cols(i: int, j: int):
		for row in a:
			row[i], row[j] = row[j], row[i]
		if V is not None:
			for row in V:
				row[i], row[j] = row[j], row[i]
			V_inv[i], V_inv[j] = V_inv[j], V_inv[i]

	def add_row(target: int, source: int, q: int):
		"""row_target += q * row_source"""
		src, dst = a[source], a[target]
		for c in range(n):
			if src[c]:
				dst[c] += q * src[c]
		if U is not None:
			src, dst = U[source], U[target]
			for c in range(m):
				if src[c]:
					dst[c] += q * src[c]

	def add_col(target: int, source: int, q: int):
		"""col_target += q * col_source"""
		for row in a:
			if row[source]:
				row[target] += q * row[source]
		if V is not None:
			for row in V:
				if row[source]:
					row[target] += q * row[source]
			src, dst = V_inv[target], V_inv[source]
			for c in range(n):
				if src[c]:
					dst[c] -= q * src[c]

	t = 0
	while t < min(m, n):
		pivot = _least_entry(a, range(t, m), range(t, n))
		if pivot is None:
			break
		swap_rows(t, pivot[0])
		swap_cols(t, pivot[1])

		while True:
			p = a[t][t]
			for i in range(t + 1, m):
				if a[i][t]:
					add_row(i, t, -(a[i][t] // p))
			for j in range(t + 1, n):
				if a[t][j]:
					add_col(j, t, -(a[t][j] // p))

			leftover = [(i, t) for i in range(t + 1, m) if a[i][t]] + [(t, j) for j in range(t + 1, n) if a[t][j]]
			if leftover:
				i, j = min(leftover, key=lambda cell: (abs(a[cell[0]][cell[1]]), cell))
				swap_rows(t, i)
				swap_cols(t, j)
				continue

			bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
			if bad is None:
				break
			add_row(t, bad[0], 1)

		if a[t][t] < 0:
			a[t] = [-value for value in a[t]]
			if U is not None:
				U[t] = [-value for value in U[t]]
		t += 1

	diagonal = [a[i][i] for i in range(min(m, n))]
	logger.debug("smith normal form of a %dx%d matrix, rank %d", m, n, sum(1 for d in diagonal if d))
	return SmithForm(diagonal, m, n, U, V, V_inv)

def _least_entry(a: Dense, rows, cols) -> Optional[Tuple[int, int]]:
	best = None
	best_value = 0
	for i in rows:
		row = a[i]
		for j in cols:
			value = abs(row[j])
			if value and (best is None or value < best_value):
				best, best_value = (i, j), value
				if value == 1:
					return best
	return best

def determinant(dense: Dense) -> int:
	"""Return the determinant of a square integer matrix."""
	if not dense:
		return 1
	return int(Matrix(dense).det())

def verify_smith_form(matrix: Union[SparseIntMatrix, Sequence[Sequence[int]]], form: SmithForm) -> bool:
	"""Check U*A*V = D, the divisibility chain and unimodularity of U and V."""
	dense = matrix.to_dense() if isinstance(matrix, SparseIntMatrix) else [list(row) for row in matrix]
	if form.U is None or form.V is None:
		raise ValueError("transforms were not computed")

	if matmul(matmul(form.U, dense, inner=form.rows), form.V, inner=form.cols) != form.D():
		return False
	invariants = form.invariants
	if any(d < 0 for d in invariants):
		return False
	if any(invariants[i + 1] % invariants[i] for i in range(len(invariants) - 1)):
		return False
	if any(form.diagonal[i] == 0 and form.diagonal[i + 1] != 0 for i in range(len(form.diagonal) - 1)):
		return False
	if matmul(form.V, form.V_inv, inner=form.cols) != identity(form.cols):
		return False
	return abs(determinant(form.U)) == 1 and abs(determinant(form.V)) == 1
