#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Agemo subgroups and powerful embeddings."""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from sympy import factorint

from pairmult.exceptions import NotPGroup
from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.subgroup import Subgroup, commutator_subgroup, subgroup_generated, whole_group

def group_prime(order: int) -> Optional[int]:
	"""Return p if order is a power of the prime p, None for 1."""
	if order == 1:
		return None
	factors = factorint(order)
	if len(factors) != 1:
		raise NotPGroup(f"order {order} is not a prime power")
	return int(next(iter(factors)))

def is_p_subgroup(H: Subgroup, p: int) -> bool:
	"""Return whether every element order of H is a power of p."""
	orders = np.unique(H.element_orders())
	for order in orders.tolist():
		while order % p == 0:
			order //= p
		if order != 1:
			return False
	return True

def agemo(H: Subgroup, i: int, p: int) -> Subgroup:
	"""Return the subgroup generated by the p^i-th powers of all elements of H."""
	if i < 0:
		raise ValueError("i must be nonnegative")
	if not is_p_subgroup(H, p):
		raise NotPGroup(f"subgroup of order {H.order} is not a {p}-group")
	if i == 0:
		return H

	powers = power_set(H, i, p)
	return subgroup_generated(H.parent, powers.tolist())

def power_set(H: Subgroup, i: int, p: int) -> np.ndarray:
	"""Return the set {h^(p^i) : h in H} as a sorted index array."""
	return np.unique(H.parent.power_array(H.members, p ** i))

def exponent(H: Subgroup) -> int:
	"""Return the lcm of the element orders of H."""
	return H.exponent()

@dataclass(frozen=True)
class PowerfulFlags:
	"""Powerful embedding predicates of a subgroup."""
	powerfully_embedded: bool
	powerful: bool

def powerfully_embedded(N: Subgroup, G: FiniteGroup, p: int) -> bool:
	"""Return whether [N,G] lies in the p-th power agemo of N (4-th for p = 2)."""
	depth = 2 if p == 2 else 1
	return commutator_subgroup(N, whole_group(G)).issubset(agemo(N, depth, p))

def powerful_embedding_check(N: Subgroup, G: FiniteGroup, p: int) -> PowerfulFlags:
	"""
	Return whether N is powerfully embedded in G and whether N is powerful.

	N is powerful when it is powerfully embedded in itself; for N = G both
	flags coincide.
	"""
	if N.parent is not G:
		raise ValueError("N is not a subgroup of G")
	if not is_p_subgroup(whole_group(G), p):
		raise NotPGroup(f"{G.name} is not a {p}-group")

	embedded = powerfully_embedded(N, G, p)
	if N.is_whole():
		return PowerfulFlags(embedded, embedded)

	depth = 2 if p == 2 else 1
	powerful = commutator_subgroup(N, N).issubset(agemo(N, depth, p))
	return PowerfulFlags(embedded, powerful)
