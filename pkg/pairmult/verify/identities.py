#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Commutator identities and agemo inclusions checked on concrete groups."""

from itertools import product
import random
from typing import List, Optional, Sequence, Tuple

from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.powers import agemo, power_set, powerfully_embedded
from pairmult.groups.series import nilpotency_class, relative_center_series, upper_central_series
from pairmult.groups.subgroup import (Subgroup, commutator_subgroup, normal_closure, subgroup_generated,
                                      subgroup_product, whole_group)

Failure = Tuple[str, Tuple[int, ...]]

def _commutator3(G: FiniteGroup, a: int, b: int, c: int) -> int:
	return G.commutator(G.commutator(a, b), c)

def _pick(rng: random.Random, H: Subgroup) -> int:
	return int(H.members[rng.randrange(H.order)])

def commutator_identity_failures(G: FiniteGroup, rng: random.Random, samples: int = 1000,
                                 M: Optional[Subgroup] = None) -> List[Failure]:
	"""
	Sample the commutator laws of a normal subgroup M under conjugation.

	Checked: [mn,g] = [m,g]^n [n,g]; [m,gh] = [m,h][m,g]^h;
	[m^-1,g]^-1 = [m,g]^(m^-1); [m,g^-1]^-1 = [m,g]^(g^-1); the Hall-Witt
	identity [m,g^-1,h]^g ([m,[g,h^-1]]^-1)^h [[m^-1,h]^-1,g]^m = 1; and
	[m^k,g] = [m,g]^k [m,g,m]^(k(k-1)/2) modulo [M,G,G,G].
	"""
	M = M if M is not None else whole_group(G)
	assert M.is_normal(), "M must be normal"

	whole = whole_group(G)
	deep = commutator_subgroup(commutator_subgroup(commutator_subgroup(M, whole), whole), whole)
	exponent = G.exponent()
	mul, inv, comm, conj = G.mul, G.inv, G.commutator, G.conjugate

	failures: List[Failure] = []
	for _ in range(samples):
		m, n = _pick(rng, M), _pick(rng, M)
		g, h = rng.randrange(G.order), rng.randrange(G.order)
		k = rng.randrange(exponent + 1)

		if comm(mul(m, n), g) != mul(conj(comm(m, g), n), comm(n, g)):
			failures.append(("[mn,g]", (m, n, g)))
		if comm(m, mul(g, h)) != mul(comm(m, h), conj(comm(m, g), h)):
			failures.append(("[m,gh]", (m, g, h)))
		if inv(comm(inv(m), g)) != conj(comm(m, g), inv(m)):
			failures.append(("[m^-1,g]", (m, g)))
		if inv(comm(m, inv(g))) != conj(comm(m, g), inv(g)):
			failures.append(("[m,g^-1]", (m, g)))

		hall_witt = mul(mul(
			conj(_commutator3(G, m, inv(g), h), g),
			conj(inv(comm(m, comm(g, inv(h)))), h)),
			conj(comm(inv(comm(inv(m), h)), g), m))
		if hall_witt != 0:
			failures.append(("Hall-Witt", (m, g, h)))

		lhs = comm(G.power(m, k), g)
		rhs = mul(G.power(comm(m, g), k), G.power(_commutator3(G, m, g, m), k * (k - 1) // 2))
		if mul(inv(rhs), lhs) not in deep:
			failures.append(("[m^k,g]", (m, g, k)))

	return failures

def power_commutator_failures(G: FiniteGroup, rng: random.Random, samples: int = 200) -> List[Failure]:
	"""Check that [x^n,g] = [x,g]^n c with c in the derived subgroup of <x,[x,g]>."""
	failures: List[Failure] = []
	exponent = G.exponent()
	for _ in range(samples):
		x, g = rng.randrange(G.order), rng.randrange(G.order)
		n = rng.randrange(exponent + 1)
		c = G.mul(G.inv(G.power(G.commutator(x, g), n)), G.commutator(G.power(x, n), g))
		H = subgroup_generated(G, [x, G.commutator(x, g)])
		if c not in commutator_subgroup(H, H):
			failures.append(("[x^n,g]", (x, g, n)))
	return failures

def _pairs(G: FiniteGroup, rng: random.Random, samples: Optional[int]):
	if samples is None or G.order ** 2 <= samples:
		return product(range(G.order), repeat=2)
	return ((rng.randrange(G.order), rng.randrange(G.order)) for _ in range(samples))

def class2_power_failures(G: FiniteGroup, rng: random.Random, samples: Optional[int] = None) -> List[Failure]:
	"""Check (xy)^a = x^a y^a [y,x]^(a(a-1)/2) in a group of class at most 2."""
	assert nilpotency_class(G) <= 2, f"{G.name} has class above 2"
	failures: List[Failure] = []
	exponent = G.exponent()
	for x, y in _pairs(G, rng, samples):
		for a in range(exponent + 1):
			lhs = G.power(G.mul(x, y), a)
			rhs = G.mul(G.mul(G.power(x, a), G.power(y, a)), G.power(G.commutator(y, x), a * (a - 1) // 2))
			if lhs != rhs:
				failures.append(("(xy)^a", (x, y, a)))
	return failures

def class3_commutator_failures(G: FiniteGroup, rng: random.Random, samples: Optional[int] = None) -> List[Failure]:
	"""Check [b^a,c] = [b,c]^a [b,c,b]^(a(a-1)/2) in a group of class at most 3."""
	assert nilpotency_class(G) <= 3, f"{G.name} has class above 3"
	failures: List[Failure] = []
	exponent = G.exponent()
	for b, c in _pairs(G, rng, samples):
		for a in range(exponent + 1):
			lhs = G.commutator(G.power(b, a), c)
			rhs = G.mul(G.power(G.commutator(b, c), a), G.power(_commutator3(G, b, c, b), a * (a - 1) // 2))
			if lhs != rhs:
				failures.append(("[b^a,c]", (b, c, a)))
	return failures

def agemo_inclusion_failures(H: Subgroup, p: int, depth: int = 2) -> List[Failure]:
	"""Check agemo_(i+j)(H) <= agemo_i(agemo_j(H)) for i, j <= depth."""
	failures: List[Failure] = []
	for i in range(depth + 1):
		for j in range(depth + 1):
			if not agemo(H, i + j, p).issubset(agemo(agemo(H, j, p), i, p)):
				failures.append(("agemo inclusion", (i, j)))
	return failures

def powerful_agemo_failures(H: Subgroup, p: int, depth: int = 2) -> List[Failure]:
	"""
	Check agemo identities of a powerful group H.

	agemo_i(agemo_j(H)) = agemo_(i+j)(H), agemo_i(H) is the set of p^i-th
	powers, and it is generated by the p^i-th powers of the generators.
	"""
	failures: List[Failure] = []
	G = H.parent
	for i in range(depth + 1):
		target = agemo(H, i, p)
		for j in range(depth + 1):
			if agemo(agemo(H, j, p), i, p) != agemo(H, i + j, p):
				failures.append(("agemo composition", (i, j)))
		if list(power_set(H, i, p)) != list(target.members):
			failures.append(("agemo powers", (i,)))
		if subgroup_generated(G, [G.power(g, p ** i) for g in H.generators]) != target:
			failures.append(("agemo generators", (i,)))
	return failures

def embedded_agemo_failures(N: Subgroup, G: FiniteGroup, p: int, depth: int = 2) -> List[Failure]:
	"""Check that the agemos of a powerfully embedded N are powerfully embedded."""
	if not powerfully_embedded(N, G, p):
		return []
	return [("embedded agemo", (i,)) for i in range(1, depth + 1)
	        if not powerfully_embedded(agemo(N, i, p), G, p)]

def normal_subgroup_sample(G: FiniteGroup, rng: random.Random, count: int = 8) -> List[Subgroup]:
	"""Return distinct normal subgroups: normal closures of random elements and their products."""
	found = {}
	for subgroup in (whole_group(G), normal_closure(G, [])):
		found[subgroup.members.tobytes()] = subgroup
	for _ in range(count):
		subgroup = normal_closure(G, [rng.randrange(G.order)])
		found.setdefault(subgroup.members.tobytes(), subgroup)
	closures = list(found.values())
	for a in closures:
		for b in closures:
			subgroup = subgroup_product(a, b)
			found.setdefault(subgroup.members.tobytes(), subgroup)
	return sorted(found.values(), key=lambda s: (s.order, s.members.tolist()))

def commutator_absorption_failures(G: FiniteGroup, normals: Sequence[Subgroup]) -> List[Failure]:
	"""Check that M <= K[M,G] implies M <= K for normal M, K."""
	whole = whole_group(G)
	failures: List[Failure] = []
	for a, M in enumerate(normals):
		bracket = commutator_subgroup(M, whole)
		for b, K in enumerate(normals):
			if M.issubset(subgroup_product(K, bracket)) and not M.issubset(K):
				failures.append(("M <= K[M,G]", (a, b)))
	return failures

def agemo_commutator_failures(G: FiniteGroup, p: int, normals: Sequence[Subgroup]) -> List[Failure]:
	"""
	Check the agemo-commutator inclusions for normal M.

	Odd p: [agemo_1(M),G] <= agemo_1([M,G]) [M,G,G,G].
	p = 2: [agemo_2(M),G] <= agemo_2([M,G]) agemo_1([M,G,G]) [M,G,G,G].
	"""
	whole = whole_group(G)
	failures: List[Failure] = []
	for a, M in enumerate(normals):
		m1 = commutator_subgroup(M, whole)
		m2 = commutator_subgroup(m1, whole)
		m3 = commutator_subgroup(m2, whole)
		if p == 2:
			left = commutator_subgroup(agemo(M, 2, p), whole)
			right = subgroup_product(subgroup_product(agemo(m1, 2, p), agemo(m2, 1, p)), m3)
		else:
			left = commutator_subgroup(agemo(M, 1, p), whole)
			right = subgroup_product(agemo(m1, 1, p), m3)
		if not left.issubset(right):
			failures.append(("[agemo(M),G]", (a,)))
	return failures

def relative_center_failures(M: Subgroup, G: FiniteGroup, n: int = 3) -> List[Failure]:
	"""Check Z_i(M,G) <= Z_i(M) for i <= n."""
	relative = relative_center_series(M, G, n)
	absolute = upper_central_series(M)
	failures: List[Failure] = []
	for i, term in enumerate(relative, 1):
		if not term.issubset(absolute[min(i, len(absolute) - 1)]):
			failures.append(("Z_i(M,G) <= Z_i(M)", (i,)))
	return failures
