#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Homomorphisms between finite groups."""

import numpy as np

from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.subgroup import Subgroup

class GroupHom:
	"""Class representing a homomorphism given by its image on every element."""
	def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, image):
		"""Initialize a homomorphism."""
		self.domain = domain
		self.codomain = codomain
		self.image = np.asarray(image, dtype=np.int64)

		if self.image.shape != (domain.order,):
			raise ValueError(f"image must have {domain.order} entries, got shape {self.image.shape}")
		if self.image.size and (self.image.min() < 0 or self.image.max() >= codomain.order):
			raise ValueError("image contains indices outside the codomain")

	def __str__(self) -> str:
		"""Return a string representation of the homomorphism."""
		return f"GroupHom({self.domain.name} -> {self.codomain.name})"

	def __call__(self, x):
		"""Return the image of an element or index array."""
		return self.image[x]

	@classmethod
	def identity(cls, G: FiniteGroup) -> 'GroupHom':
		return cls(G, G, np.arange(G.order))

	@classmethod
	def trivial(cls, domain: FiniteGroup, codomain: FiniteGroup) -> 'GroupHom':
		return cls(domain, codomain, np.zeros(domain.order, dtype=np.int64))

	def verify(self, exhaustive: bool = False) -> bool:
		"""
		Check the homomorphism property.

		By default only products x*g with g a domain generator are tested,
		which already implies the property for every pair.
		"""
		xs = self.domain.elements()
		if exhaustive:
			right = xs
		else:
			right = np.asarray(self.domain.generators, dtype=np.int64)
			if right.size == 0:
				return bool(self.image[0] == 0)

		lhs = self.image[self.domain.mul_array(xs[:, None], right[None, :])]
		rhs = self.codomain.mul_array(self.image[xs][:, None], self.image[right][None, :])
		return bool(np.array_equal(lhs, rhs))

	def compose(self, inner: 'GroupHom') -> 'GroupHom':
		"""Return self after inner, x -> self(inner(x))."""
		if inner.codomain is not self.domain:
			raise ValueError("homomorphisms are not composable")
		return GroupHom(inner.domain, self.codomain, self.image[inner.image])

	def kernel(self) -> Subgroup:
		return Subgroup(self.domain, np.flatnonzero(self.image == 0))
