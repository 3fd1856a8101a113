#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Reports on the exponent of the multiplier of a pair."""

from dataclasses import dataclass, field
import json
import logging
from typing import Dict, List, Optional, Union

from sympy import multiplicity

from pairmult.exceptions import CapExceeded, NoComplement, NotPGroup
from pairmult.groups.constructions import find_complement
from pairmult.groups.pair import Pair
from pairmult.groups.powers import group_prime, is_p_subgroup, powerfully_embedded
from pairmult.groups.series import nilpotency_class, pair_class
from pairmult.groups.subgroup import whole_group
from pairmult.multiplier.pair import BACKEND_SPLIT_SUM, PairMultiplier, pair_multiplier, schur_multiplier
from pairmult.utils.config import Limits, get_limits
from pairmult.verify.bounds import BoundSet, bound_formulas

logger = logging.getLogger(__name__)

UNTESTED = "untested"
UNAVAILABLE = "unavailable"

Verdict = Union[bool, None, str]

# Verdicts whose failure contradicts a proved statement. divides_exp_N is
# informative only: it is allowed to fail.
THEOREM_VERDICTS = ("thm27_holds", "cor28_holds", "thm311_holds", "divides_order_N", "split_sum_holds")

@dataclass
class PairReport:
	"""
	Class representing everything computed about a pair (G,N) of p-groups.

	exp(N) = p^e, k is the class of the pair and m = floor(log_p k). The
	multiplier is None when no backend applies, in which case every
	verdict that needs it is "untested".
	"""
	group_name: str
	order_G: int
	order_N: int
	p: int
	e: int
	pair_class: int
	m: int
	exp_N: int
	class_G: int
	multiplier: Optional[PairMultiplier]
	bounds: BoundSet
	flags: Dict[str, bool]
	verdicts: Dict[str, Verdict] = field(default_factory=dict)
	known_counterexample: bool = False
	error: Optional[str] = None

	def __str__(self) -> str:
		"""Return a string representation of the report."""
		multiplier = str(self.multiplier.structure) if self.multiplier is not None else UNAVAILABLE
		return (f"PairReport({self.group_name}, |G|={self.order_G}, |N|={self.order_N}, "
		        f"k={self.pair_class}, M={multiplier})")

	@property
	def exp_M(self) -> Optional[int]:
		return self.multiplier.exponent if self.multiplier is not None else None

	def violations(self) -> List[str]:
		"""Return the names of the theorem verdicts that came out false."""
		return [name for name in THEOREM_VERDICTS if self.verdicts.get(name) is False]

	def is_untested(self) -> bool:
		return self.multiplier is None

	def to_dict(self) -> dict:
		return {
			"group_name": self.group_name,
			"order_G": self.order_G,
			"order_N": self.order_N,
			"p": self.p,
			"e": self.e,
			"pair_class": self.pair_class,
			"m": self.m,
			"exp_N": self.exp_N,
			"class_G": self.class_G,
			"multiplier": self.multiplier.to_dict() if self.multiplier is not None else UNAVAILABLE,
			"exp_M": self.exp_M,
			"bounds": self.bounds.to_dict(),
			"flags": dict(self.flags),
			"verdicts": dict(self.verdicts),
			"known_counterexample": self.known_counterexample,
			"error": self.error,
		}

	def to_json(self) -> str:
		return json.dumps(self.to_dict(), indent=2)

def _divides(a: int, b: int) -> bool:
	return b % a == 0

def _verdict(applicable: bool, holds: Optional[bool]) -> Verdict:
	if not applicable:
		return None
	return UNTESTED if holds is None else holds

def verdicts_for(report: PairReport, split_sum: Optional[bool] = None) -> Dict[str, Verdict]:
	"""
	Return the verdicts of a report as a function of its other fields.

	split_sum is whether |M(G)| = |M(G,N)| |M(K)|, None when it was not
	computed. It only applies to split pairs with 1 < N < G.
	"""
	exp_M = report.exp_M

	def divides(value: int) -> Optional[bool]:
		return None if exp_M is None else _divides(exp_M, value)

	cor28_applicable = report.flags["class_le_p_minus_1"]
	thm311_applicable = report.flags["powerfully_embedded"]
	proper = 1 < report.order_N < report.order_G
	return {
		"thm27_holds": _verdict(True, divides(report.bounds.thm27)),
		"cor28_applicable": cor28_applicable,
		"cor28_holds": _verdict(cor28_applicable, divides(report.exp_N)),
		"thm311_applicable": thm311_applicable,
		"thm311_holds": _verdict(thm311_applicable, divides(report.exp_N)),
		"divides_order_N": _verdict(True, divides(report.order_N)),
		"divides_exp_N": _verdict(True, divides(report.exp_N)),
		"split_sum_holds": _verdict(report.flags["split"] and proper, split_sum),
	}

def _split_sum(pair: Pair, multiplier: PairMultiplier, limits: Limits) -> Optional[bool]:
	"""Compare |M(G)| with |M(G,N)| |M(K)|, None when a side is out of reach."""
	if pair.k_sub is None or pair.is_whole() or pair.n_sub.is_trivial():
		return None
	try:
		if multiplier.backend == BACKEND_SPLIT_SUM:
			m_g = multiplier.structure
		else:
			m_g = schur_multiplier(pair.group, limits=limits).structure
		K, _ = pair.k_sub.as_group(name=f"{pair.group.name}_K", limits=limits)
		m_k = schur_multiplier(K, limits=limits).structure
	except CapExceeded as error:
		logger.info("split sum of %s skipped: %s", pair.group.name, error)
		return None
	return m_g.order() == multiplier.structure.order() * m_k.order()

def analyze_pair(pair: Pair, p: Optional[int] = None, known_counterexample: bool = False,
                 limits: Optional[Limits] = None) -> PairReport:
	"""
	Compute the invariants, bounds, multiplier and verdicts of a pair of p-groups.

	A missing complement is searched for. When the multiplier cannot be
	computed (no complement, or a cap is hit) the report carries the error
	and its verdicts are "untested".
	"""
	limits = get_limits(limits)
	G, N = pair.group, pair.n_sub

	if p is None:
		p = group_prime(G.order)
		if p is None:
			raise NotPGroup(f"{G.name} is trivial, there is no prime to use")
	if not is_p_subgroup(whole_group(G), p):
		raise NotPGroup(f"{G.name} is not a {p}-group")

	exp_N = N.exponent()
	e = multiplicity(p, exp_N) if exp_N > 1 else 0
	k = pair_class(pair)
	c = nilpotency_class(G)
	bounds = bound_formulas(p, e, k, c)

	error = None
	if pair.k_sub is None and not pair.is_whole() and not N.is_trivial():
		try:
			k_sub = find_complement(G, N, limits=limits)
		except CapExceeded as exc:
			k_sub, error = None, str(exc)
		if k_sub is not None:
			pair = pair.with_complement(k_sub)

	multiplier = None
	try:
		multiplier = pair_multiplier(pair, limits=limits)
	except (NoComplement, CapExceeded) as exc:
		error = error or str(exc)
		logger.warning("multiplier of %s unavailable: %s", pair, exc)

	flags = {
		"powerfully_embedded": powerfully_embedded(N, G, p),
		"class_le_p_minus_1": k <= p - 1,
		"split": pair.is_split() or pair.is_whole() or N.is_trivial(),
	}

	report = PairReport(
		group_name=G.name,
		order_G=G.order,
		order_N=N.order,
		p=p,
		e=int(e),
		pair_class=k,
		m=bounds.m,
		exp_N=exp_N,
		class_G=c,
		multiplier=multiplier,
		bounds=bounds,
		flags=flags,
		known_counterexample=known_counterexample,
		error=error,
	)
	split_sum = _split_sum(pair, multiplier, limits) if multiplier is not None else None
	report.verdicts = verdicts_for(report, split_sum)

	logger.info("%s: verdicts %s", report, report.verdicts)
	return report
