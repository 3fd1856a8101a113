#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Consistency of pc presentations."""

from dataclasses import dataclass, field
import logging
from typing import Iterator, List, Optional, Tuple

from pairmult.pc.collector import Collector, CollectorState, Exponents
from pairmult.pc.presentation import PcPresentation
from pairmult.utils.config import Limits

logger = logging.getLogger(__name__)

@dataclass
class Overlap:
	"""An overlap word collected in two ways."""
	description: str
	left: CollectorState
	right: CollectorState

	def agrees(self) -> bool:
		return self.left.exponents == self.right.exponents

	def tail_relation(self) -> List[int]:
		"""Return left tails minus right tails."""
		return [a - b for a, b in zip(self.left.tails, self.right.tails)]

@dataclass
class ConsistencyReport:
	"""Result of a consistency check."""
	checked_overlaps: int = 0
	failures: List[Tuple[str, Exponents, Exponents]] = field(default_factory=list)

	@property
	def consistent(self) -> bool:
		return not self.failures

def overlaps(presentation: PcPresentation, tails: bool = False,
             limits: Optional[Limits] = None) -> Iterator[Overlap]:
	"""
	Yield every overlap of the presentation, collected both ways.

	For k > j > i: (g_k g_j) g_i against g_k (g_j g_i); for j > i:
	(g_j^o_j) g_i against g_j^(o_j - 1) (g_j g_i) and g_j (g_i^o_i) against
	(g_j g_i) g_i^(o_i - 1); for every i: (g_i^o_i) g_i against g_i (g_i^o_i).
	"""
	collector = Collector(presentation, tails=tails, limits=limits)
	names = presentation.names
	orders = presentation.orders
	n = presentation.n
	letters_of = presentation.letters_of

	def power_state(i: int) -> CollectorState:
		state = collector.state(presentation.power_rhs[i])
		if state.tails is not None:
			state.tails[presentation.power_tail(i)] += 1
		return state

	def times_state(state: CollectorState, other: CollectorState) -> CollectorState:
		collector.apply(state, letters_of(other.exponents))
		state.add_tails(other.tails)
		return state

	pairs = {}
	def pair(j: int, i: int) -> CollectorState:
		if (j, i) not in pairs:
			pairs[(j, i)] = collector.collect([j, i])
		return pairs[(j, i)].copy()

	for k in range(n):
		for j in range(k):
			for i in range(j):
				left = collector.apply(collector.collect([k, j]), [i])
				right = times_state(collector.collect([k]), pair(j, i))
				yield Overlap(f"{names[k]} {names[j]} {names[i]}", left, right)

	for j in range(n):
		for i in range(j):
			left = collector.apply(power_state(j), [i])
			right = times_state(collector.collect([j] * (orders[j] - 1)), pair(j, i))
			yield Overlap(f"{names[j]}^{orders[j]} {names[i]}", left, right)

			left = collector.apply(collector.collect([j]), letters_of(presentation.power_rhs[i]))
			if left.tails is not None:
				left.tails[presentation.power_tail(i)] += 1
			right = collector.apply(pair(j, i), [i] * (orders[i] - 1))
			yield Overlap(f"{names[j]} {names[i]}^{orders[i]}", left, right)

	for i in range(n):
		left = collector.apply(power_state(i), [i])
		right = times_state(collector.collect([i]), power_state(i))
		yield Overlap(f"{names[i]}^{orders[i] + 1}", left, right)

def consistency_check(presentation: PcPresentation, limits: Optional[Limits] = None) -> ConsistencyReport:
	"""Collect every overlap both ways and report the disagreements."""
	report = ConsistencyReport()
	for overlap in overlaps(presentation, limits=limits):
		report.checked_overlaps += 1
		if not overlap.agrees():
			report.failures.append((overlap.description, overlap.left.normal_word(), overlap.right.normal_word()))

	logger.info("checked %d overlaps, %d failures", report.checked_overlaps, len(report.failures))
	return report
