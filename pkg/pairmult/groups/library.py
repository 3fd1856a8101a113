#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Standard finite groups."""

from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from pairmult.groups.constructions import action_from_generators, direct_product, semidirect_product
from pairmult.groups.finitegroup import FiniteGroup, closure_from_generators
from pairmult.groups.subgroup import Subgroup, subgroup_generated
from pairmult.pc.parser import presentation_from_dict
from pairmult.pc.pcgroup import pc_to_group
from pairmult.pc.presentation import PcPresentation
from pairmult.pc.words import parse_word
from pairmult.utils.config import Limits

# Orders (b, a, x1, ..., x5) = (2, 4, 2, 4, 4, 4, 2); x2..x5 generate an
# abelian normal subgroup and every power relation is trivial.
EXAMPLE21_DOCUMENT = {
	"name": "example21",
	"pc": {
		"generators": ["b", "a", "x1", "x2", "x3", "x4", "x5"],
		"orders": [2, 4, 2, 4, 4, 4, 2],
		"powers": {},
		"commutators": {
			"x2,x1": "x2^2",
			"x3,x1": "x3^2",
			"x4,x1": "x4^2",
			"x1,a": "x3",
			"x2,a": "x2^2 x3^2 x4^3",
			"x3,a": "x5",
			"x4,a": "x2^2",
			"x5,a": "x3^2",
			"x1,b": "x2",
			"x2,b": "x2^2 x4^3 x5",
			"x3,b": "x4",
			"x4,b": "x3^2 x4^2",
			"x5,b": "x2^2 x3^2 x4^2",
			"a,b": "x1",
		},
	},
	"subgroups": {"N": "a x1 x2 x3 x4 x5"},
	"complements": {"N": "b"},
}

def cyclic(n: int, name: Optional[str] = None, label: str = "a") -> FiniteGroup:
	"""Return Z_n, element i being the i-th power of the generator."""
	if n < 1:
		raise ValueError("order must be positive")
	elements = np.arange(n)
	table = (elements[:, None] + elements[None, :]) % n
	gen_labels = {label: 1} if n > 1 else None
	return FiniteGroup(table=table, name=name or f"Z{n}", generators=[1] if n > 1 else [], gen_labels=gen_labels)

def abelian(invariants: Sequence[int], name: Optional[str] = None, limits: Optional[Limits] = None) -> FiniteGroup:
	"""
	Return Z_d1 x ... x Z_dt.

	Element (e_1, ..., e_t) has index e_1 + d_1 e_2 + d_1 d_2 e_3 + ...
	"""
	invariants = list(invariants)
	if not invariants:
		return cyclic(1, name=name or "Z1")

	group = cyclic(invariants[0], label="a1")
	for i, d in enumerate(invariants[1:], 2):
		group = direct_product(group, cyclic(d, label=f"a{i}"), limits=limits)
	group.name = name or "x".join(f"Z{d}" for d in invariants)
	return group

def _multiplication_action(n: int, k: int, r: int) -> np.ndarray:
	"""Return the action of Z_k on Z_n where the generator acts as x -> r*x."""
	elements = np.arange(n)
	return np.stack([(elements * pow(r, j, n)) % n for j in range(k)])

def metacyclic(n: int, k: int, r: int, name: str, limits: Optional[Limits] = None) -> FiniteGroup:
	"""Return Z_n x| Z_k, the generator of Z_k acting as x -> x^r."""
	if pow(r, k, n) != 1 % n:
		raise ValueError(f"x -> x^{r} does not have order dividing {k} on Z{n}")
	return semidirect_product(cyclic(n, label="x"), cyclic(k, label="y"), _multiplication_action(n, k, r),
	                          name=name, limits=limits)

def dihedral(n: int, name: Optional[str] = None, limits: Optional[Limits] = None) -> FiniteGroup:
	"""Return the dihedral group of order 2n, generated by a rotation r and a reflection s."""
	return semidirect_product(cyclic(n, label="r"), cyclic(2, label="s"), _multiplication_action(n, 2, -1),
	                          name=name or f"D{n}", limits=limits)

def semidihedral16(limits: Optional[Limits] = None) -> FiniteGroup:
	return metacyclic(8, 2, 3, "SD16", limits=limits)

def modular16(limits: Optional[Limits] = None) -> FiniteGroup:
	return metacyclic(8, 2, 5, "M16", limits=limits)

def z4_semidirect_z4(limits: Optional[Limits] = None) -> FiniteGroup:
	return metacyclic(4, 4, -1, "Z4:Z4", limits=limits)

def m27(limits: Optional[Limits] = None) -> FiniteGroup:
	"""Return the extraspecial group of order 27 and exponent 9."""
	return metacyclic(9, 3, 4, "M27", limits=limits)

def heisenberg27(limits: Optional[Limits] = None) -> FiniteGroup:
	"""
	Return the extraspecial group of order 27 and exponent 3.

	It is (Z3 x Z3) x| Z3 with t fixing x and sending y to xy.
	"""
	N = abelian([3, 3], limits=limits)
	K = cyclic(3, label="t")
	elements = np.arange(9)
	a, b = elements % 3, elements // 3
	phi = (a + b) % 3 + 3 * b
	action = action_from_generators(N, K, {1: phi})
	return semidirect_product(N, K, action, name="H27", limits=limits)

def extraspecial32(limits: Optional[Limits] = None) -> FiniteGroup:
	"""
	Return the extraspecial group of order 32 with an elementary abelian subgroup of order 8.

	It is <z, a, b> x| <c, d>, c sending a to az and d sending b to bz.
	"""
	N = abelian([2, 2, 2], limits=limits)
	K = abelian([2, 2], limits=limits)
	z, a, b = np.arange(8) & 1, (np.arange(8) >> 1) & 1, (np.arange(8) >> 2) & 1
	phi_c = ((z + a) % 2) + 2 * a + 4 * b
	phi_d = ((z + b) % 2) + 2 * a + 4 * b
	action = action_from_generators(N, K, {1: phi_c, 2: phi_d})
	return semidirect_product(N, K, action, name="E32", limits=limits)

def permutation_group(degree: int, generators: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
                      name: str = "G", limits: Optional[Limits] = None) -> FiniteGroup:
	"""
	Return the group generated by permutations of 0..degree-1.

	Each generator lists its images; permutations act on the right, so
	p*q applies p first.
	"""
	perms = []
	for images in generators:
		images = tuple(int(x) for x in images)
		if sorted(images) != list(range(degree)):
			raise ValueError(f"{list(images)} is not a permutation of 0..{degree - 1}")
		perms.append(images)

	def mul(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
		return tuple(q[x] for x in p)

	if not perms:
		perms = [tuple(range(degree))]
	return closure_from_generators(perms, mul, name=name, labels=names, limits=limits)

def quaternion(order: int = 8, limits: Optional[Limits] = None) -> FiniteGroup:
	"""Return the generalised quaternion group <x, y | x^(n/2) = 1, y^2 = x^(n/4), x^y = x^-1>."""
	if order < 8 or order & (order - 1):
		raise ValueError("order must be a power of 2, at least 8")
	half = order // 2
	presentation = PcPresentation.from_words(
		["y", "x"], [2, half],
		powers={0: [(1, half // 2)]},
		commutators={(1, 0): [(1, -2)]},
		limits=limits,
	)
	return pc_to_group(presentation, name=f"Q{order}", limits=limits)

def example21_presentation(limits: Optional[Limits] = None) -> PcPresentation:
	return presentation_from_dict(EXAMPLE21_DOCUMENT["pc"], source="example21", limits=limits)

def example21(limits: Optional[Limits] = None) -> FiniteGroup:
	"""Return the group of order 2048 that defeats exp(M(G,N)) | exp(N)."""
	return pc_to_group(example21_presentation(limits=limits), name="example21", limits=limits)

def subgroup_from_text(G: FiniteGroup, text: str, source: Optional[str] = None) -> Subgroup:
	"""
	Return the subgroup generated by the terms of a word-string.

	Each term name^e is one generator, so "a x1^2" is <a, x1^2>.
	"""
	if not G.gen_labels:
		raise ValueError(f"{G.name} has no generator names")
	names = list(G.gen_labels)
	gens = [G.power(G.gen_labels[names[g]], e) for g, e in parse_word(text, names, source=source)]
	return subgroup_generated(G, gens)

LIBRARY: Dict[str, Callable[..., FiniteGroup]] = {
	"S3": lambda limits=None: permutation_group(3, [[1, 0, 2], [1, 2, 0]], names=["s", "t"], name="S3", limits=limits),
	"D4": lambda limits=None: dihedral(4, limits=limits),
	"D8": lambda limits=None: dihedral(8, limits=limits),
	"Q8": lambda limits=None: quaternion(8, limits=limits),
	"Q16": lambda limits=None: quaternion(16, limits=limits),
	"SD16": semidihedral16,
	"M16": modular16,
	"Z4:Z4": z4_semidirect_z4,
	"H27": heisenberg27,
	"M27": m27,
	"E32": extraspecial32,
	"example21": example21,
}
