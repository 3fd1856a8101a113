#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Polycyclic presentations."""

import logging
from math import prod
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from pairmult.exceptions import BadOrder, IndexDiscipline
from pairmult.pc.collector import Collector, Exponents
from pairmult.pc.words import Letters, format_word, parse_word
from pairmult.utils.config import Limits

logger = logging.getLogger(__name__)

class PcPresentation:
	"""
	Class representing a pc presentation.

	Generators g_1..g_n have relative orders o_i >= 2. The power relation
	g_i^o_i and the commutator relation [g_j,g_i] (j > i) have right hand
	sides that are normal words in g_{i+1}..g_n, stored as exponent vectors.
	Relations not given are trivial.
	"""
	def __init__(self,
	             names: Sequence[str],
	             orders: Sequence[int],
	             powers: Optional[Mapping[int, Sequence[int]]] = None,
	             commutators: Optional[Mapping[Tuple[int, int], Sequence[int]]] = None,
	            ):
		"""Initialize a presentation from normal-word right hand sides."""
		if len(names) != len(orders):
			raise ValueError(f"{len(names)} generators but {len(orders)} relative orders")
		if len(set(names)) != len(names):
			raise ValueError("generator names must be distinct")

		self.names = list(names)
		self.orders = [int(o) for o in orders]
		self.n = len(self.names)

		for name, order in zip(self.names, self.orders):
			if order < 2:
				raise BadOrder(f"relative order of {name} is {order}, must be at least 2")

		zero = (0,) * self.n
		self.power_rhs: List[Exponents] = [zero] * self.n
		for i, rhs in (powers or {}).items():
			self.power_rhs[i] = self._checked_rhs(rhs, i, f"{self.names[i]}^{self.orders[i]}")

		self.comm_rhs: Dict[Tuple[int, int], Exponents] = {}
		for (j, i), rhs in (commutators or {}).items():
			if not 0 <= i < j < self.n:
				raise IndexDiscipline(
					f"commutator [{self.names[j]},{self.names[i]}] must have its first generator later than its second")
			rhs = self._checked_rhs(rhs, i, f"[{self.names[j]},{self.names[i]}]")
			if any(rhs):
				self.comm_rhs[(j, i)] = rhs

		self.relation_count = self.n + self.n * (self.n - 1) // 2

		self.power_letters_reversed = [list(reversed(self.letters_of(rhs))) for rhs in self.power_rhs]
		self.conjugate_letters_reversed = [
			[list(reversed([j] + self.letters_of(self.comm_rhs.get((j, i), zero)))) for i in range(self.n)]
			for j in range(self.n)
		]

		self._collector: Optional[Collector] = None
		self._inverses: List[Optional[Exponents]] = [None] * self.n

	def __str__(self) -> str:
		"""Return a string representation of the presentation."""
		return f"PcPresentation(generators={self.names}, orders={self.orders})"

	def __eq__(self, other) -> bool:
		if not isinstance(other, PcPresentation):
			return NotImplemented
		return (self.names == other.names and self.orders == other.orders
		        and self.power_rhs == other.power_rhs and self.comm_rhs == other.comm_rhs)

	def _checked_rhs(self, rhs: Sequence[int], i: int, what: str) -> Exponents:
		rhs = tuple(int(e) for e in rhs)
		if len(rhs) != self.n:
			raise ValueError(f"{what}: right hand side has {len(rhs)} exponents, expected {self.n}")
		for k, e in enumerate(rhs):
			if e and k <= i:
				raise IndexDiscipline(f"{what}: right hand side uses {self.names[k]}, only generators after {self.names[i]} are allowed")
			if not 0 <= e < self.orders[k]:
				raise ValueError(f"{what}: exponent {e} of {self.names[k]} is not reduced")
		return rhs

	@classmethod
	def from_words(cls,
	               names: Sequence[str],
	               orders: Sequence[int],
	               powers: Optional[Mapping[int, Letters]] = None,
	               commutators: Optional[Mapping[Tuple[int, int], Letters]] = None,
	               limits: Optional[Limits] = None,
	              ) -> 'PcPresentation':
		"""
		Build a presentation from arbitrary relation words.

		Right hand sides may use any order and any exponents. They are
		collected from the last generator backwards, since the relations of
		g_{i+1}..g_n are all that is needed to normalise those of g_i.
		"""
		n = len(names)
		powers = dict(powers or {})
		commutators = dict(commutators or {})

		for i, word in powers.items():
			cls._check_discipline(names, word, i, f"{names[i]}^{orders[i]}")
		for (j, i), word in commutators.items():
			if not 0 <= i < j < n:
				raise IndexDiscipline(f"commutator [{names[j]},{names[i]}] must have its first generator later than its second")
			cls._check_discipline(names, word, i, f"[{names[j]},{names[i]}]")

		normal_powers: Dict[int, Exponents] = {}
		normal_commutators: Dict[Tuple[int, int], Exponents] = {}
		for i in range(n - 1, -1, -1):
			partial = cls(names, orders, normal_powers, normal_commutators)
			if i in powers:
				normal_powers[i] = partial.collect_word(powers[i], limits=limits)
			for j in range(i + 1, n):
				if (j, i) in commutators:
					normal_commutators[(j, i)] = partial.collect_word(commutators[(j, i)], limits=limits)

		return cls(names, orders, normal_powers, normal_commutators)

	@staticmethod
	def _check_discipline(names: Sequence[str], word: Letters, i: int, what: str):
		for k, _ in word:
			if k <= i:
				raise IndexDiscipline(f"{what}: right hand side uses {names[k]}, only generators after {names[i]} are allowed")

	def power_tail(self, i: int) -> int:
		"""Return the tail index of the power relation of g_i."""
		return i

	def commutator_tail(self, j: int, i: int) -> int:
		"""Return the tail index of the relation [g_j,g_i], j > i."""
		return self.n + j * (j - 1) // 2 + i

	def order(self) -> int:
		"""Return the product of the relative orders."""
		return prod(self.orders)

	def identity(self) -> Exponents:
		return (0,) * self.n

	def index(self, name: str) -> int:
		return self.names.index(name)

	@staticmethod
	def letters_of(exponents: Sequence[int]) -> List[int]:
		"""Expand a normal word into single letters."""
		letters: List[int] = []
		for k, e in enumerate(exponents):
			letters.extend([k] * e)
		return letters

	def collector(self, limits: Optional[Limits] = None) -> Collector:
		if limits is not None:
			return Collector(self, limits=limits)
		if self._collector is None:
			self._collector = Collector(self)
		return self._collector

	def collect(self, letters: Sequence[int], limits: Optional[Limits] = None) -> Exponents:
		"""Collect a word of positive letters."""
		return self.collector(limits).collect(letters).normal_word()

	def collect_word(self, word: Letters, limits: Optional[Limits] = None) -> Exponents:
		"""Collect a word of (generator, exponent) pairs, negative exponents included."""
		letters: List[int] = []
		for g, e in word:
			if e >= 0:
				letters.extend([g] * e)
			else:
				letters.extend(self.letters_of(self.inverse_generator(g)) * (-e))
		return self.collect(letters, limits=limits)

	def word(self, text: str, source: Optional[str] = None) -> Exponents:
		"""Parse and collect a word-string."""
		return self.collect_word(parse_word(text, self.names, source))

	def format(self, exponents: Sequence[int]) -> str:
		return format_word(exponents, self.names)

	def multiply(self, x: Sequence[int], y: Sequence[int]) -> Exponents:
		collector = self.collector()
		return collector.apply(collector.state(x), self.letters_of(y)).normal_word()

	def power(self, x: Sequence[int], e: int) -> Exponents:
		if e < 0:
			x, e = self.invert(x), -e
		result = self.identity()
		for _ in range(e):
			result = self.multiply(result, x)
		return result

	def inverse_generator(self, i: int) -> Exponents:
		"""Return g_i^-1 = g_i^(o_i - 1) * (g_i^o_i)^-1 as a normal word."""
		if self._inverses[i] is None:
			letters = [i] * (self.orders[i] - 1) + self._inverse_letters(self.power_rhs[i])
			self._inverses[i] = self.collect(letters)
		return self._inverses[i]

	def _inverse_letters(self, exponents: Sequence[int]) -> List[int]:
		letters: List[int] = []
		for k in range(self.n - 1, -1, -1):
			if exponents[k]:
				letters.extend(self.letters_of(self.inverse_generator(k)) * exponents[k])
		return letters

	def invert(self, x: Sequence[int]) -> Exponents:
		return self.collect(self._inverse_letters(x))

	def relations(self) -> Iterator[Tuple[str, Exponents]]:
		"""Yield the nontrivial relations as (left hand side, right hand side)."""
		for i, rhs in enumerate(self.power_rhs):
			if any(rhs):
				yield f"{self.names[i]}^{self.orders[i]}", rhs
		for (j, i), rhs in sorted(self.comm_rhs.items(), key=lambda item: (item[0][1], item[0][0])):
			yield f"[{self.names[j]},{self.names[i]}]", rhs

	def to_dict(self) -> dict:
		"""Return the presentation in group-file form."""
		return {
			"generators": list(self.names),
			"orders": list(self.orders),
			"powers": {self.names[i]: self.format(rhs) for i, rhs in enumerate(self.power_rhs) if any(rhs)},
			"commutators": {
				f"{self.names[j]},{self.names[i]}": self.format(rhs)
				for (j, i), rhs in sorted(self.comm_rhs.items(), key=lambda item: (item[0][1], item[0][0]))
			},
		}

	@classmethod
	def from_dict(cls, document: Mapping, source: Optional[str] = None,
	              limits: Optional[Limits] = None) -> 'PcPresentation':
		from pairmult.pc.parser import presentation_from_dict
		return presentation_from_dict(document, source=source, limits=limits)
