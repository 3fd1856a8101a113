#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Collection from the left."""

from typing import List, Optional, Sequence, Tuple

from pairmult.exceptions import NonTermination
from pairmult.utils.config import Limits, get_limits

Exponents = Tuple[int, ...]

class CollectorState:
	"""
	A collected word, optionally carrying tail exponents.

	Tails are central and of infinite order, so they only ever add up.
	"""
	def __init__(self, exponents: Sequence[int], tails: Optional[Sequence[int]] = None):
		"""Initialize a state."""
		self.exponents = list(exponents)
		self.tails = list(tails) if tails is not None else None

	def __str__(self) -> str:
		"""Return a string representation of the state."""
		return f"CollectorState(exponents={self.exponents}, tails={self.tails})"

	def copy(self) -> 'CollectorState':
		return CollectorState(self.exponents, self.tails)

	def add_tails(self, tails: Optional[Sequence[int]]):
		if self.tails is None or tails is None:
			return
		for index, value in enumerate(tails):
			self.tails[index] += value

	def normal_word(self) -> Exponents:
		return tuple(self.exponents)

class Collector:
	"""
	Collection engine of a pc presentation.

	Multiplying the normal word g_1^e_1 ... g_n^e_n by g_i on the right
	raises e_i and moves the suffix g_{i+1}^e_{i+1} ... g_n^e_n past g_i as
	the conjugate u^g_i, which is pushed onto a stack of pending letters
	together with the power relation of g_i if e_i overflows.
	With tails enabled every relation applied adds to its tail.
	"""
	def __init__(self, presentation, tails: bool = False, limits: Optional[Limits] = None):
		"""Initialize a collector for a presentation."""
		self.presentation = presentation
		self.tails = tails
		self.step_cap = get_limits(limits).collect_step_cap

	def identity(self) -> CollectorState:
		n = self.presentation.n
		return CollectorState([0] * n, [0] * self.presentation.relation_count if self.tails else None)

	def state(self, exponents: Sequence[int]) -> CollectorState:
		state = self.identity()
		state.exponents = list(exponents)
		return state

	def apply(self, state: CollectorState, letters: Sequence[int]) -> CollectorState:
		"""Multiply state in place by the letters g_l, in order, and return it."""
		presentation = self.presentation
		n = presentation.n
		orders = presentation.orders
		conjugates = presentation.conjugate_letters_reversed
		powers = presentation.power_letters_reversed
		exponents = state.exponents
		tails = state.tails

		stack: List[int] = list(reversed(letters))
		steps = 0
		while stack:
			steps += 1
			if steps > self.step_cap:
				raise NonTermination(f"collection exceeded {self.step_cap} steps")

			i = stack.pop()
			for k in range(n - 1, i, -1):
				e = exponents[k]
				if e:
					exponents[k] = 0
					stack.extend(conjugates[k][i] * e)
					if tails is not None:
						tails[presentation.commutator_tail(k, i)] += e

			exponents[i] += 1
			if exponents[i] == orders[i]:
				exponents[i] = 0
				stack.extend(powers[i])
				if tails is not None:
					tails[presentation.power_tail(i)] += 1

		return state

	def collect(self, letters: Sequence[int]) -> CollectorState:
		"""Collect a word of positive letters starting from the identity."""
		return self.apply(self.identity(), letters)
