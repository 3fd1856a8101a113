#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""The group of order 2048 where exp(M(G,N)) does not divide exp(N)."""

import logging
from typing import Any, List, NamedTuple, Optional

from pairmult.exceptions import Inconsistent
from pairmult.groups.library import EXAMPLE21_DOCUMENT, example21_presentation, subgroup_from_text
from pairmult.groups.pair import Pair
from pairmult.groups.series import nilpotency_class
from pairmult.multiplier.tails import tails_module
from pairmult.pc.pcgroup import pc_to_group
from pairmult.utils.config import Limits, get_limits
from pairmult.verify.report import PairReport, analyze_pair

logger = logging.getLogger(__name__)

class Fact(NamedTuple):
	name: str
	expected: Any
	observed: Any

	@property
	def holds(self) -> bool:
		return self.expected == self.observed

class Reproduction(NamedTuple):
	"""Checked facts, and the pair report when the group could be built."""
	facts: List[Fact]
	report: Optional[PairReport]

	@property
	def reproduced(self) -> bool:
		return all(fact.holds for fact in self.facts)

def reproduce_example21(limits: Optional[Limits] = None) -> Reproduction:
	"""
	Rebuild the group from its presentation and recompute every stated fact.

	An inconsistent presentation is reported as a failed "consistent" fact
	with no report.
	"""
	limits = get_limits(limits)
	presentation = example21_presentation(limits=limits)

	try:
		G = pc_to_group(presentation, name="example21", limits=limits)
	except Inconsistent as e:
		logger.error("example21 presentation is inconsistent: %s", e)
		return Reproduction([Fact("consistent", True, False)], None)

	N = subgroup_from_text(G, EXAMPLE21_DOCUMENT["subgroups"]["N"])
	K = subgroup_from_text(G, EXAMPLE21_DOCUMENT["complements"]["N"])
	pair = Pair(G, N, K)

	module = tails_module(presentation, limits=limits)
	report = analyze_pair(pair, p=2, known_counterexample=True, limits=limits)

	facts = [
		Fact("consistent", True, True),
		Fact("|G|", 2048, G.order),
		Fact("class(G)", 6, nilpotency_class(G)),
		Fact("exp(G)", 4, G.exponent()),
		Fact("|G:N|", 2, G.order // N.order),
		Fact("exp(N)", 4, report.exp_N),
		Fact("|K|", 2, K.order),
		Fact("tails free rank", 7, module.free_rank),
		Fact("M(G)", [2, 4, 8], module.torsion),
		Fact("exp(M(G,N))", 8, report.exp_M),
		Fact("exp(M(G,N)) divides exp(N)", False, report.verdicts["divides_exp_N"]),
	]
	return Reproduction(facts, report)
