#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Exponent bounds for multipliers of pairs."""

from dataclasses import asdict, dataclass
from typing import Optional

from sympy import isprime

def floor_log(value: int, base: int) -> int:
	"""Return the largest m with base^m <= value, 0 for value < 1."""
	if base < 2:
		raise ValueError("base must be at least 2")
	m = 0
	power = base
	while power <= value:
		power *= base
		m += 1
	return m

@dataclass(frozen=True)
class BoundSet:
	"""
	Upper bounds for exp(M(G,N)) of a pair of p-groups.

	e is given by exp(N) = p^e, k is the class of the pair, c the class of G
	and m = floor(log_p k).
	"""
	p: int
	e: int
	k: int
	m: int
	thm27: int
	ellis: int
	moravec: int
	jones: Optional[int] = None

	def to_dict(self) -> dict:
		document = asdict(self)
		for key in ("p", "e", "k", "m"):
			del document[key]
		return document

def bound_formulas(p: int, e: int, k: int, c: Optional[int] = None) -> BoundSet:
	"""
	Return the four exponent bounds.

	p^(e + m(k-1)) with m = floor(log_p k), p^(e(c-1)) when c is known,
	p^(e ceil(k/2)) and p^(2e floor(log_2 k)). A trivial pair (k = 0) takes m = 0.
	"""
	if not isprime(p):
		raise ValueError(f"{p} is not prime")
	if e < 0 or k < 0:
		raise ValueError("e and k must be nonnegative")

	m = floor_log(k, p)
	return BoundSet(
		p=p, e=e, k=k, m=m,
		thm27=p ** (e + m * max(k - 1, 0)),
		ellis=p ** (e * ((k + 1) // 2)),
		moravec=p ** (2 * e * floor_log(k, 2)),
		jones=p ** (e * (c - 1)) if c is not None and c >= 1 else None,
	)
