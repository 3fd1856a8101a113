#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Subgroups of finite groups."""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from pairmult.exceptions import CapExceeded
from pairmult.groups.finitegroup import BLOCK_CELLS, FiniteGroup
from pairmult.utils.config import Limits, get_limits

logger = logging.getLogger(__name__)

class Subgroup:
	"""
	Class representing a subgroup of a FiniteGroup.

	Members are kept as a sorted index array (the identity 0 comes first)
	together with a boolean membership mask over the parent.
	"""
	def __init__(self, parent: FiniteGroup, members: Iterable[int], generators: Optional[Sequence[int]] = None):
		"""Initialize a subgroup from its full member set."""
		self.parent = parent
		if not isinstance(members, np.ndarray):
			members = list(members)
		self.members = np.unique(np.asarray(members, dtype=np.int64))
		if self.members.size == 0 or self.members[0] != 0:
			self.members = np.union1d(self.members, [0]).astype(np.int64)

		assert parent.order % self.members.size == 0, \
			f"subgroup of order {self.members.size} in a group of order {parent.order}"

		self.mask = np.zeros(parent.order, dtype=bool)
		self.mask[self.members] = True

		if generators is None:
			generators = self._greedy_generators()
		self.generators = [int(g) for g in generators if int(g) != 0]

		self._normal: Optional[bool] = None

	def __str__(self) -> str:
		"""Return a string representation of the subgroup."""
		return f"Subgroup(order={self.order}, parent={self.parent.name})"

	def __len__(self) -> int:
		return self.order

	def __contains__(self, x: int) -> bool:
		return bool(self.mask[x])

	def __eq__(self, other) -> bool:
		if not isinstance(other, Subgroup):
			return NotImplemented
		return self.parent is other.parent and np.array_equal(self.members, other.members)

	def __hash__(self) -> int:
		return hash((id(self.parent), self.members.tobytes()))

	def _greedy_generators(self) -> List[int]:
		generators: List[int] = []
		covered = self.parent.closure_mask([])
		for x in self.members:
			if not covered[x]:
				generators.append(int(x))
				covered = self.parent.closure_mask(generators)
				if covered.sum() == self.members.size:
					break
		return generators

	@property
	def order(self) -> int:
		return int(self.members.size)

	def is_trivial(self) -> bool:
		return self.order == 1

	def is_whole(self) -> bool:
		return self.order == self.parent.order

	def contains_array(self, xs) -> np.ndarray:
		"""Return the membership of every element of xs."""
		return self.mask[xs]

	def issubset(self, other: 'Subgroup') -> bool:
		"""Return whether self is contained in other."""
		return bool(other.mask[self.members].all())

	def intersection(self, other: 'Subgroup') -> 'Subgroup':
		"""Return the intersection of two subgroups of the same parent."""
		assert self.parent is other.parent, "subgroups of different groups"
		return Subgroup(self.parent, self.members[other.mask[self.members]])

	def is_normal(self) -> bool:
		"""Return whether the subgroup is normal in its parent."""
		if self._normal is None:
			gens = np.asarray(self.generators, dtype=np.int64)
			parent_gens = np.asarray(self.parent.generators, dtype=np.int64)
			if gens.size == 0 or parent_gens.size == 0:
				self._normal = True
			else:
				conjugates = self.parent.conjugate_array(gens[:, None], parent_gens[None, :])
				self._normal = bool(self.mask[conjugates].all())
		return self._normal

	def element_orders(self) -> np.ndarray:
		return self.parent.element_orders()[self.members]

	def exponent(self) -> int:
		return int(np.lcm.reduce(self.element_orders()))

	def is_abelian(self) -> bool:
		gens = np.asarray(self.generators, dtype=np.int64)
		if gens.size == 0:
			return True
		return bool((self.parent.commutator_array(gens[:, None], gens[None, :]) == 0).all())

	def as_group(self, name: Optional[str] = None, limits: Optional[Limits] = None) -> Tuple[FiniteGroup, 'GroupHom']:
		"""
		Re-index the subgroup as a standalone group.

		Element i of the result is members[i]. Returns the group and the
		embedding homomorphism into the parent.
		"""
		from pairmult.groups.homomorphism import GroupHom

		limits = get_limits(limits)
		if self.order > limits.max_cayley:
			raise CapExceeded("subgroup table", self.order, limits.max_cayley)

		position = np.full(self.parent.order, -1, dtype=np.int64)
		position[self.members] = np.arange(self.order)

		table = position[self.parent.mul_array(self.members[:, None], self.members[None, :])]
		assert (table >= 0).all(), "subgroup is not closed"

		labels = None
		if self.parent.element_labels is not None:
			labels = [self.parent.element_labels[x] for x in self.members]

		gen_labels = {name: int(position[x]) for name, x in self.parent.gen_labels.items() if self.mask[x]}

		group = FiniteGroup(
			table=table,
			name=name or f"{self.parent.name}_sub{self.order}",
			generators=[int(position[g]) for g in self.generators],
			gen_labels=gen_labels or None,
			element_labels=labels,
		)
		return group, GroupHom(group, self.parent, self.members.copy())

def trivial_subgroup(G: FiniteGroup) -> Subgroup:
	return Subgroup(G, [0], [])

def whole_group(G: FiniteGroup) -> Subgroup:
	return Subgroup(G, np.arange(G.order), G.generators)

def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
	"""Return the smallest subgroup of G containing gens."""
	gens = [int(g) for g in gens]
	return Subgroup(G, np.flatnonzero(G.closure_mask(gens)), gens)

def subgroup_product(A: Subgroup, B: Subgroup) -> Subgroup:
	"""Return the subgroup generated by A and B (equal to AB when one is normal)."""
	assert A.parent is B.parent, "subgroups of different groups"
	return subgroup_generated(A.parent, list(A.generators) + list(B.generators))

def normal_closure(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
	"""Return the smallest normal subgroup of G containing gens."""
	gens = sorted({int(g) for g in gens} - {0})
	parent_gens = np.asarray(G.generators, dtype=np.int64)

	while True:
		mask = G.closure_mask(gens)
		if not gens or parent_gens.size == 0:
			break
		conjugates = G.conjugate_array(np.asarray(gens)[:, None], parent_gens[None, :]).ravel()
		missing = np.unique(conjugates[~mask[conjugates]])
		if missing.size == 0:
			break
		gens.extend(int(x) for x in missing)

	return Subgroup(G, np.flatnonzero(mask), gens)

def commutator_subgroup(A: Subgroup, B: Subgroup) -> Subgroup:
	"""
	Return [A,B], the subgroup generated by all [a,b] with a in A and b in B.

	When both are normal, this is the normal closure of the commutators of
	their generators; otherwise every commutator is formed.
	"""
	assert A.parent is B.parent, "subgroups of different groups"
	G = A.parent

	if A.is_trivial() or B.is_trivial():
		return trivial_subgroup(G)

	if A.is_normal() and B.is_normal():
		gens_a = np.asarray(A.generators, dtype=np.int64)
		gens_b = np.asarray(B.generators, dtype=np.int64)
		commutators = np.unique(G.commutator_array(gens_a[:, None], gens_b[None, :]))
		return normal_closure(G, commutators.tolist())

	return subgroup_generated(G, all_commutators(A, B).tolist())

def all_commutators(A: Subgroup, B: Subgroup) -> np.ndarray:
	"""Return the set of all commutators [a,b], a in A, b in B."""
	G = A.parent
	seen = np.zeros(G.order, dtype=bool)
	step = max(1, BLOCK_CELLS // max(1, B.order))
	for start in range(0, A.order, step):
		block = A.members[start:start + step]
		seen[G.commutator_array(block[:, None], B.members[None, :]).ravel()] = True
	return np.flatnonzero(seen)
