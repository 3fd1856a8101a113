#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Sparse integer matrices."""

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from pairmult.exceptions import DimensionMismatch, MatrixFormatError

Row = Dict[int, int]

class SparseIntMatrix:
	"""
	Class representing a sparse matrix of Python integers.

	Only nonzero entries are stored.
	"""
	def __init__(self, rows: int, cols: int, entries: Optional[Mapping[Tuple[int, int], int]] = None):
		"""Initialize a matrix from a (row, col) -> value map."""
		if rows < 0 or cols < 0:
			raise ValueError("dimensions must be nonnegative")

		self.rows = rows
		self.cols = cols
		self.entries: Dict[Tuple[int, int], int] = {}
		for (r, c), value in (entries or {}).items():
			if not (0 <= r < rows and 0 <= c < cols):
				raise DimensionMismatch(f"entry ({r}, {c}) outside a {rows}x{cols} matrix")
			value = int(value)
			if value:
				self.entries[(r, c)] = value

	def __str__(self) -> str:
		"""Return a string representation of the matrix."""
		return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

	def __eq__(self, other) -> bool:
		if not isinstance(other, SparseIntMatrix):
			return NotImplemented
		return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

	def __getitem__(self, key: Tuple[int, int]) -> int:
		return self.entries.get(key, 0)

	@property
	def nnz(self) -> int:
		return len(self.entries)

	def density(self) -> float:
		cells = self.rows * self.cols
		return self.nnz / cells if cells else 0.0

	@classmethod
	def from_dense(cls, dense: Sequence[Sequence[int]], cols: Optional[int] = None) -> 'SparseIntMatrix':
		rows = len(dense)
		if cols is None:
			cols = len(dense[0]) if rows else 0
		entries = {}
		for r, row in enumerate(dense):
			if len(row) != cols:
				raise DimensionMismatch(f"row {r} has {len(row)} entries, expected {cols}")
			for c, value in enumerate(row):
				if value:
					entries[(r, c)] = value
		return cls(rows, cols, entries)

	@classmethod
	def from_rows(cls, rows: Iterable[Mapping[int, int]], cols: int) -> 'SparseIntMatrix':
		entries = {}
		count = 0
		for r, row in enumerate(rows):
			for c, value in row.items():
				if value:
					entries[(r, c)] = value
			count = r + 1
		return cls(count, cols, entries)

	def to_dense(self) -> List[List[int]]:
		dense = [[0] * self.cols for _ in range(self.rows)]
		for (r, c), value in self.entries.items():
			dense[r][c] = value
		return dense

	def row_dicts(self) -> List[Row]:
		rows: List[Row] = [{} for _ in range(self.rows)]
		for (r, c), value in self.entries.items():
			rows[r][c] = value
		return rows

	def transpose(self) -> 'SparseIntMatrix':
		return SparseIntMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

	@classmethod
	def from_text(cls, text: str) -> 'SparseIntMatrix':
		"""
		Parse the matrix text format.

		The first line holds "rows cols", every further nonblank line one
		nonzero entry "r c value" with 0-based indices.
		"""
		lines = [(number, line.split()) for number, line in enumerate(text.splitlines(), 1) if line.strip()]
		if not lines:
			raise MatrixFormatError("empty matrix file")

		number, header = lines[0]
		if len(header) != 2:
			raise MatrixFormatError(f"line {number}: expected \"rows cols\"")
		rows, cols = _integers(header, number)
		if rows < 0 or cols < 0:
			raise MatrixFormatError(f"line {number}: dimensions must be nonnegative")

		entries: Dict[Tuple[int, int], int] = {}
		for number, fields in lines[1:]:
			if len(fields) != 3:
				raise MatrixFormatError(f"line {number}: expected \"r c value\"")
			r, c, value = _integers(fields, number)
			if not (0 <= r < rows and 0 <= c < cols):
				raise MatrixFormatError(f"line {number}: entry ({r}, {c}) outside a {rows}x{cols} matrix")
			if (r, c) in entries:
				raise MatrixFormatError(f"line {number}: duplicate entry ({r}, {c})")
			entries[(r, c)] = value

		return cls(rows, cols, entries)

	def to_text(self) -> str:
		lines = [f"{self.rows} {self.cols}"]
		for (r, c), value in sorted(self.entries.items()):
			lines.append(f"{r} {c} {value}")
		return "\n".join(lines) + "\n"

def _integers(fields: Sequence[str], number: int) -> List[int]:
	try:
		return [int(field) for field in fields]
	except ValueError:
		raise MatrixFormatError(f"line {number}: expected integers, got {' '.join(fields)!r}") from None
