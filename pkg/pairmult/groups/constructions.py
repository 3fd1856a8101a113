#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Quotients, products, Sylow decompositions and complements."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from pairmult.exceptions import CapExceeded, NotAction, NotAutomorphism, NotNilpotent, NotNormal
from pairmult.groups.finitegroup import BLOCK_CELLS, FiniteGroup
from pairmult.groups.homomorphism import GroupHom
from pairmult.groups.pair import Pair
from pairmult.groups.series import is_nilpotent
from pairmult.groups.subgroup import Subgroup, subgroup_generated, trivial_subgroup, whole_group
from pairmult.utils.config import Limits, get_limits

logger = logging.getLogger(__name__)

def quotient_group(G: FiniteGroup, N: Subgroup, name: Optional[str] = None) -> Tuple[FiniteGroup, GroupHom]:
	"""
	Return G/N and the projection G -> G/N.

	Cosets are indexed in increasing order of their smallest element, so
	the coset N itself gets index 0.
	"""
	if N.parent is not G:
		raise ValueError("N is not a subgroup of G")
	if not N.is_normal():
		raise NotNormal(f"subgroup of order {N.order} is not normal in {G.name}")

	representative = np.empty(G.order, dtype=np.int64)
	step = max(1, BLOCK_CELLS // N.order)
	for start in range(0, G.order, step):
		block = np.arange(start, min(G.order, start + step))
		representative[block] = G.mul_array(block[:, None], N.members[None, :]).min(axis=1)

	cosets = np.unique(representative)
	index = np.full(G.order, -1, dtype=np.int64)
	index[cosets] = np.arange(cosets.size)
	projection = index[representative]

	table = projection[G.mul_array(cosets[:, None], cosets[None, :])]
	generators = sorted({int(projection[g]) for g in G.generators} - {0})

	quotient = FiniteGroup(table=table, name=name or f"{G.name}/N{N.order}", generators=generators)
	return quotient, GroupHom(G, quotient, projection)

def is_automorphism(N: FiniteGroup, phi) -> bool:
	"""Return whether the index map phi is an automorphism of N."""
	phi = np.asarray(phi, dtype=np.int64)
	if phi.shape != (N.order,) or phi[0] != 0:
		return False
	if np.unique(phi).size != N.order:
		return False
	return GroupHom(N, N, phi).verify()

def _check_action(N: FiniteGroup, K: FiniteGroup, action: np.ndarray):
	if action.shape != (K.order, N.order):
		raise NotAction(f"action must have shape {(K.order, N.order)}, got {action.shape}")

	for k in K.generators:
		if not is_automorphism(N, action[k]):
			raise NotAutomorphism(f"action of K-element {k} is not an automorphism")

	if not np.array_equal(action[0], np.arange(N.order)):
		raise NotAction("identity of K does not act trivially")

	for g in K.generators:
		products = K.mul_array(K.elements(), g)
		composed = action[:, action[g]]
		if not np.array_equal(action[products], composed):
			raise NotAction(f"action is not a homomorphism at generator {g}")

def action_from_generators(N: FiniteGroup, K: FiniteGroup, images: Dict[int, Sequence[int]]) -> np.ndarray:
	"""
	Extend automorphisms of N given on the generators of K to all of K.

	images maps each generator of K to an index map of N. The result has
	one row per element of K, with phi_{xy} = phi_x after phi_y.
	"""
	if set(images) != set(K.generators):
		raise NotAction("an image is required for exactly the generators of K")

	for g, phi in images.items():
		if not is_automorphism(N, phi):
			raise NotAutomorphism(f"image of K-generator {g} is not an automorphism")

	action = np.full((K.order, N.order), -1, dtype=np.int64)
	action[0] = np.arange(N.order)
	queue = [0]
	position = 0
	while position < len(queue):
		x = queue[position]
		position += 1
		for g in K.generators:
			y = K.mul(x, g)
			candidate = action[x][np.asarray(images[g], dtype=np.int64)]
			if action[y, 0] < 0:
				action[y] = candidate
				queue.append(y)
			elif not np.array_equal(action[y], candidate):
				raise NotAction(f"conflicting automorphisms for K-element {y}")

	return action

def semidirect_product(N: FiniteGroup, K: FiniteGroup, action, name: Optional[str] = None,
                       limits: Optional[Limits] = None) -> FiniteGroup:
	"""
	Return the semidirect product of N by K.

	Element (n,k) has index n + |N|*k and (n1,k1)(n2,k2) = (n1*phi_{k1}(n2), k1*k2),
	where action[k] is the index map phi_k. Conjugation inside the product
	satisfies k*n*k^-1 = phi_k(n), so n^k = phi_{k^-1}(n).
	The embedded copies of N and K are recorded in the factors attribute.
	"""
	limits = get_limits(limits)
	action = np.asarray(action, dtype=np.int64)
	_check_action(N, K, action)

	n, k = N.order, K.order
	order = n * k
	if order > limits.max_cayley:
		raise CapExceeded("semidirect product", order, limits.max_cayley)

	table = np.empty((order, order), dtype=np.int64)
	n_all = np.arange(n)
	columns_n = np.tile(n_all, k)
	columns_k = np.repeat(np.arange(k), n)
	for k1 in range(k):
		left = N.mul_array(n_all[:, None], action[k1][columns_n][None, :])
		right = K.mul_array(k1, columns_k)
		table[k1 * n:(k1 + 1) * n] = left + n * right[None, :]

	gen_labels = None
	if N.gen_labels and K.gen_labels and not set(N.gen_labels) & set(K.gen_labels):
		gen_labels = dict(N.gen_labels)
		gen_labels.update({label: n * x for label, x in K.gen_labels.items()})

	generators = list(N.generators) + [n * x for x in K.generators]
	group = FiniteGroup(table=table, name=name or f"{N.name}:{K.name}",
	                    generators=generators, gen_labels=gen_labels)
	group.factors = (n_all.copy(), n * np.arange(k))
	return group

def direct_product(A: FiniteGroup, B: FiniteGroup, name: Optional[str] = None,
                   limits: Optional[Limits] = None) -> FiniteGroup:
	"""Return A x B, element (a,b) having index a + |A|*b."""
	action = np.tile(np.arange(A.order), (B.order, 1))
	return semidirect_product(A, B, action, name=name or f"{A.name}x{B.name}", limits=limits)

def factor_subgroups(G: FiniteGroup) -> Tuple[Subgroup, Subgroup]:
	"""Return the embedded N and K of a group built by semidirect_product."""
	if G.factors is None:
		raise ValueError(f"{G.name} was not built as a product")
	n_members, k_members = G.factors
	return Subgroup(G, n_members), Subgroup(G, k_members)

def sylow_decomposition(G: FiniteGroup) -> List[Subgroup]:
	"""Return the Sylow subgroups of a nilpotent group, by increasing prime."""
	if not is_nilpotent(G):
		raise NotNilpotent(f"{G.name} is not nilpotent")

	orders = G.element_orders()
	primes = sorted(int(p) for p in factorint(G.order))
	if not primes:
		return [whole_group(G)]

	sylows = []
	for p in primes:
		p_orders = [int(o) for o in np.unique(orders) if _is_power_of(int(o), p)]
		members = np.flatnonzero(np.isin(orders, p_orders))
		sylow = subgroup_generated(G, members.tolist())
		assert sylow.order == members.size, f"{p}-elements of {G.name} do not form a subgroup"
		sylows.append(sylow)

	assert np.prod([s.order for s in sylows]) == G.order, "Sylow orders do not multiply to |G|"
	for i, a in enumerate(sylows):
		for b in sylows[i + 1:]:
			gens_a = np.asarray(a.generators, dtype=np.int64)
			gens_b = np.asarray(b.generators, dtype=np.int64)
			if gens_a.size and gens_b.size:
				assert (G.commutator_array(gens_a[:, None], gens_b[None, :]) == 0).all(), \
					"Sylow subgroups do not commute"
	return sylows

def _is_power_of(value: int, p: int) -> bool:
	while value % p == 0:
		value //= p
	return value == 1

def find_complement(G: FiniteGroup, N: Subgroup, limits: Optional[Limits] = None) -> Optional[Subgroup]:
	"""
	Search for a complement of the normal subgroup N.

	Generators of G/N are lifted one at a time to coset representatives;
	a partial choice is dropped as soon as the subgroup it generates meets
	N nontrivially. Returns None if N has no complement.
	"""
	limits = get_limits(limits)
	if not N.is_normal():
		raise NotNormal(f"subgroup of order {N.order} is not normal in {G.name}")
	if N.is_whole():
		return trivial_subgroup(G)
	if N.is_trivial():
		return whole_group(G)
	if G.order > limits.max_complement:
		raise CapExceeded("complement search", G.order, limits.max_complement)

	quotient, projection = quotient_group(G, N)
	target = quotient.order

	quotient_gens: List[int] = []
	mask = quotient.closure_mask([])
	for q in quotient.generators:
		if not mask[q]:
			quotient_gens.append(q)
			mask = quotient.closure_mask(quotient_gens)

	lifts = [np.flatnonzero(projection.image == q) for q in quotient_gens]

	def search(chosen: List[int]) -> Optional[Subgroup]:
		if len(chosen) == len(quotient_gens):
			candidate = subgroup_generated(G, chosen)
			return candidate if candidate.order == target else None
		for x in lifts[len(chosen)]:
			attempt = chosen + [int(x)]
			closure = G.closure_mask(attempt)
			if np.count_nonzero(closure[N.members]) > 1:
				continue
			found = search(attempt)
			if found is not None:
				return found
		return None

	complement = search([])
	logger.debug("complement search in %s: %s", G.name, "found" if complement is not None else "none")
	return complement

def retraction(pair: Pair, limits: Optional[Limits] = None) -> GroupHom:
	"""
	Return the retraction G -> K of a split pair.

	Every g is uniquely n*k with n in N and k in K, and maps to k. The
	codomain is K re-indexed by K.as_group().
	"""
	if pair.k_sub is None:
		raise ValueError("retraction needs a complement")

	K, _ = pair.k_sub.as_group(name=f"{pair.group.name}_K", limits=limits)
	products = pair.group.mul_array(pair.n_sub.members[:, None], pair.k_sub.members[None, :])

	image = np.empty(pair.group.order, dtype=np.int64)
	image[products] = np.broadcast_to(np.arange(pair.k_sub.order)[None, :], products.shape)
	hom = GroupHom(pair.group, K, image)
	assert hom.verify(), "retraction is not a homomorphism"
	return hom
