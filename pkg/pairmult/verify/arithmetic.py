#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Arithmetic behind the exponent bounds."""

from typing import Iterable, List, NamedTuple, Optional

from sympy import binomial, multiplicity, primerange

from pairmult.verify.bounds import floor_log

class BinomialViolation(NamedTuple):
	p: int
	t: int
	k: int
	m: int
	s: int

class BoundComparison(NamedTuple):
	p: int
	e: int
	k: int
	thm27: int
	moravec: int

def binomial_divisibility_check(p: int, t_max: int, k_max: int) -> List[BinomialViolation]:
	"""
	Check that p^t divides C(p^(t+m), s) for 1 <= s <= k, m = floor(log_p k).

	t ranges over 1..t_max and k over 1..k_max. Returns the violations.
	"""
	violations = []
	for t in range(1, t_max + 1):
		for k in range(1, k_max + 1):
			m = floor_log(k, p)
			top = p ** (t + m)
			for s in range(1, k + 1):
				if multiplicity(p, binomial(top, s)) < t:
					violations.append(BinomialViolation(p, t, k, m, s))
	return violations

def small_class_bound_violations(primes: Optional[Iterable[int]] = None, e_max: int = 6) -> List[BoundComparison]:
	"""
	Compare p^(e + m(k-1)) with p^(2e floor(log_2 k)) for 2 <= k <= p-1.

	For k < p the first bound is p^e. Returns the cases where it is larger.
	"""
	if primes is None:
		primes = primerange(3, 14)

	violations = []
	for p in primes:
		for e in range(1, e_max + 1):
			for k in range(2, p):
				m = floor_log(k, p)
				thm27 = p ** (e + m * (k - 1))
				moravec = p ** (2 * e * floor_log(k, 2))
				if thm27 > moravec:
					violations.append(BoundComparison(p, e, k, thm27, moravec))
	return violations
