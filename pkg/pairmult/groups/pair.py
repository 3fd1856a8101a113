#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Pairs of groups."""

from typing import Optional

from pairmult.exceptions import InvalidComplement, NotNormal
from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.subgroup import Subgroup

class Pair:
	"""
	Class representing a pair (G,N).

	N is a normal subgroup of G. A complement K of N may be attached,
	in which case G is the semidirect product of N by K.
	"""
	def __init__(self, group: FiniteGroup, n_sub: Subgroup, k_sub: Optional[Subgroup] = None):
		"""Initialize a pair, validating normality and the complement."""
		if n_sub.parent is not group:
			raise ValueError("N is not a subgroup of G")
		if not n_sub.is_normal():
			raise NotNormal(f"subgroup of order {n_sub.order} is not normal in {group.name}")

		if k_sub is not None:
			if k_sub.parent is not group:
				raise ValueError("K is not a subgroup of G")
			check_complement(n_sub, k_sub)

		self.group = group
		self.n_sub = n_sub
		self.k_sub = k_sub

	def __str__(self) -> str:
		"""Return a string representation of the pair."""
		split = f", |K|={self.k_sub.order}" if self.k_sub is not None else ""
		return f"Pair({self.group.name}, |N|={self.n_sub.order}{split})"

	def is_split(self) -> bool:
		return self.k_sub is not None

	def is_whole(self) -> bool:
		"""Return whether N = G."""
		return self.n_sub.is_whole()

	def with_complement(self, k_sub: Subgroup) -> 'Pair':
		return Pair(self.group, self.n_sub, k_sub)

def check_complement(n_sub: Subgroup, k_sub: Subgroup):
	"""Raise InvalidComplement unless N and K intersect trivially with |N||K| = |G|."""
	if n_sub.order * k_sub.order != n_sub.parent.order:
		raise InvalidComplement(
			f"|N|*|K| = {n_sub.order}*{k_sub.order} differs from |G| = {n_sub.parent.order}")
	if not n_sub.intersection(k_sub).is_trivial():
		raise InvalidComplement("N and K intersect nontrivially")
