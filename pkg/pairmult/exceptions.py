#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""pairmult exceptions."""

from typing import Optional

class PairmultError(Exception):
	"""Base class for every error raised by pairmult."""

class CapExceeded(PairmultError):
	"""A resource guard (Cayley, bar or complement cap) was hit."""

	def __init__(self, what: str, size: int, cap: int):
		"""Initialize the error."""
		super().__init__(f"{what}: size {size} exceeds cap {cap}")
		self.what = what
		self.size = size
		self.cap = cap

class NonGroup(PairmultError):
	"""The multiplication rule does not define a group."""

class NotNormal(PairmultError):
	"""A subgroup required to be normal is not."""

class NotPGroup(PairmultError):
	"""A subgroup required to be a p-group is not."""

class NotNilpotent(PairmultError):
	"""A group or pair required to be nilpotent is not."""

class NotSolvable(PairmultError):
	"""The derived series does not reach the trivial subgroup."""

class NotAutomorphism(PairmultError):
	"""A map given as an automorphism is not one."""

class NotAction(PairmultError):
	"""A family of automorphisms is not a homomorphism K -> Aut(N)."""

class InvalidComplement(PairmultError):
	"""A declared complement does not complement the normal subgroup."""

class NoComplement(PairmultError):
	"""The pair is not known to split, so M(G,N) is not computable here."""

class NonTermination(PairmultError):
	"""Collection exceeded its step cap."""

class Inconsistent(PairmultError):
	"""A pc presentation failed its consistency check."""

class RankMismatch(PairmultError):
	"""The tails relation module has the wrong free rank."""

class PcSyntaxError(PairmultError, ValueError):
	"""Malformed word-string or presentation document."""

	def __init__(self, message: str, position: Optional[int] = None, source: Optional[str] = None):
		"""Initialize the error, remembering where it happened."""
		self.message = message
		self.position = position
		self.source = source
		where = ""
		if source is not None:
			where += f"{source}: "
		if position is not None:
			where += f"position {position}: "
		super().__init__(where + message)

class IndexDiscipline(PairmultError, ValueError):
	"""A relation uses a generator that is too early in the generator order."""

class BadOrder(PairmultError, ValueError):
	"""A relative order is smaller than 2."""

class DimensionMismatch(PairmultError, ValueError):
	"""Matrix dimensions do not fit together."""

class MatrixFormatError(PairmultError, ValueError):
	"""Malformed matrix text file."""

class GroupFileError(PairmultError, ValueError):
	"""Malformed group definition file."""
