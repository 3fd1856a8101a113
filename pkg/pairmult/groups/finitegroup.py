#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Finite groups on dense element indices."""

from functools import reduce
import logging
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from pairmult.exceptions import CapExceeded, NonGroup
from pairmult.utils.config import Limits, get_limits

logger = logging.getLogger(__name__)

# Rows of a vectorised product are processed in blocks of this many cells
# so that |A|*|B| sized intermediate arrays stay small.
BLOCK_CELLS = 1 << 22

Word = List[Tuple[str, int]]

class FiniteGroup:
	"""
	Class representing a concrete finite group.

	Elements are the indices 0..order-1, index 0 being the identity.
	Multiplication comes from a memoized Cayley table when the group is
	small enough, otherwise from a right-multiplication table by the
	generators together with a word for every element.
	"""
	def __init__(self,
	             table: Optional[np.ndarray] = None,
	             name: str = "G",
	             generators: Optional[Sequence[int]] = None,
	             gen_labels: Optional[Dict[str, int]] = None,
	             element_labels: Optional[Sequence[str]] = None,
	             right_table: Optional[np.ndarray] = None,
	             words: Optional[List[List[int]]] = None,
	            ):
		"""Initialize a group from a Cayley table, or from generator words."""
		if table is None and (right_table is None or words is None):
			raise ValueError("either a Cayley table or a right table with words is required")

		self.name = name
		self.table = None if table is None else np.asarray(table, dtype=np.int64)
		self.right_table = None if right_table is None else np.asarray(right_table, dtype=np.int64)
		self.words = words
		self.order = len(self.table) if self.table is not None else len(self.right_table)
		self.element_labels = list(element_labels) if element_labels is not None else None
		self.gen_labels: Dict[str, int] = dict(gen_labels or {})

		# Set by constructions that know more about the group.
		self.presentation = None
		self.factors: Optional[Tuple[np.ndarray, np.ndarray]] = None

		self._orders: Optional[np.ndarray] = None
		self._abelian: Optional[bool] = None

		if self.table is not None:
			self._check_table()
			self.inverses = self._table_inverses()
		else:
			self.inverses = self._word_inverses()

		if generators is None:
			generators = list(self.gen_labels.values()) or self._greedy_generators()
		self.generators = [int(g) for g in generators]

	def __str__(self) -> str:
		"""Return a string representation of the group."""
		return f"FiniteGroup(name={self.name}, order={self.order})"

	def __len__(self) -> int:
		return self.order

	def _check_table(self):
		n = self.order
		if self.table.shape != (n, n):
			raise NonGroup(f"Cayley table must be square, got shape {self.table.shape}")
		identity = np.arange(n)
		if not (np.array_equal(self.table[0], identity) and np.array_equal(self.table[:, 0], identity)):
			raise NonGroup("index 0 is not a two-sided identity")

	def _table_inverses(self) -> np.ndarray:
		hits = self.table == 0
		inverses = np.argmax(hits, axis=1)
		if not hits[np.arange(self.order), inverses].all():
			missing = int(np.flatnonzero(~hits.any(axis=1))[0])
			raise NonGroup(f"element {missing} has no inverse")
		return inverses.astype(np.int64)

	def _word_inverses(self) -> np.ndarray:
		inverses = np.zeros(self.order, dtype=np.int64)
		for x in range(1, self.order):
			previous, current = x, self.mul(x, x)
			steps = 0
			while current != 0:
				previous, current = current, self.mul(current, x)
				steps += 1
				if steps > self.order:
					raise NonGroup(f"element {x} has no inverse")
			inverses[x] = previous
		return inverses

	def _greedy_generators(self) -> List[int]:
		generators: List[int] = []
		mask = self.closure_mask([])
		while not mask.all():
			generators.append(int(np.flatnonzero(~mask)[0]))
			mask = self.closure_mask(generators)
		return generators

	@classmethod
	def from_right_multiplication(cls,
	                              right_table: np.ndarray,
	                              parents: Sequence[int],
	                              parent_gens: Sequence[int],
	                              limits: Optional[Limits] = None,
	                              **kwargs) -> 'FiniteGroup':
		"""
		Build a group from right multiplication by generators.

		right_table[x][j] is x*g_j. Every element y > 0 is parents[y]*g_{parent_gens[y]}
		with parents[y] < y. The Cayley table is memoized if the order is within
		the Cayley cap, otherwise multiplication walks element words.
		"""
		limits = get_limits(limits)
		right_table = np.asarray(right_table, dtype=np.int64)
		n = len(right_table)

		for j in range(right_table.shape[1]):
			if len(np.unique(right_table[:, j])) != n:
				raise NonGroup(f"right multiplication by generator {j} is not a bijection")

		if n <= limits.max_cayley:
			table = np.empty((n, n), dtype=np.int64)
			table[:, 0] = np.arange(n)
			for y in range(1, n):
				table[:, y] = right_table[table[:, parents[y]], parent_gens[y]]
			return cls(table=table, **kwargs)

		logger.info("order %d above Cayley cap %d, multiplying through words", n, limits.max_cayley)
		words: List[List[int]] = [[]]
		for y in range(1, n):
			words.append(words[parents[y]] + [int(parent_gens[y])])
		return cls(right_table=right_table, words=words, **kwargs)

	def has_table(self) -> bool:
		"""Return whether the Cayley table is memoized."""
		return self.table is not None

	def elements(self) -> np.ndarray:
		"""Return all element indices."""
		return np.arange(self.order)

	def mul(self, x: int, y: int) -> int:
		"""Return x*y."""
		if self.table is not None:
			return int(self.table[x, y])

		for j in self.words[y]:
			x = int(self.right_table[x, j])
		return x

	def inv(self, x: int) -> int:
		"""Return x^-1."""
		return int(self.inverses[x])

	def mul_array(self, a, b) -> np.ndarray:
		"""Multiply index arrays elementwise, with numpy broadcasting."""
		if self.table is not None:
			return self.table[a, b]

		a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
		out = np.empty(a.shape, dtype=np.int64)
		for index in np.ndindex(a.shape):
			out[index] = self.mul(int(a[index]), int(b[index]))
		return out

	def inv_array(self, a) -> np.ndarray:
		"""Invert an index array elementwise."""
		return self.inverses[a]

	def power(self, x: int, e: int) -> int:
		"""Return x^e, e may be negative."""
		return int(self.power_array(np.asarray([x]), e)[0])

	def power_array(self, xs, e: int) -> np.ndarray:
		"""Raise every element of xs to the e-th power."""
		xs = np.asarray(xs, dtype=np.int64)
		if e < 0:
			xs = self.inverses[xs]
			e = -e

		result = np.zeros(xs.shape, dtype=np.int64)
		base = xs
		while e:
			if e & 1:
				result = self.mul_array(result, base)
			e >>= 1
			if e:
				base = self.mul_array(base, base)
		return result

	def commutator_array(self, a, b) -> np.ndarray:
		"""Return [a,b] = a^-1 b^-1 a b elementwise."""
		a = np.asarray(a, dtype=np.int64)
		b = np.asarray(b, dtype=np.int64)
		return self.mul_array(self.mul_array(self.inverses[a], self.inverses[b]), self.mul_array(a, b))

	def commutator(self, x: int, y: int) -> int:
		"""Return [x,y] = x^-1 y^-1 x y."""
		return int(self.commutator_array(x, y))

	def conjugate(self, x: int, g: int) -> int:
		"""Return x^g = g^-1 x g."""
		return self.mul(self.mul(self.inv(g), x), g)

	def conjugate_array(self, x, g) -> np.ndarray:
		"""Return x^g = g^-1 x g elementwise."""
		g = np.asarray(g, dtype=np.int64)
		return self.mul_array(self.mul_array(self.inverses[g], x), g)

	def closure_mask(self, gens: Sequence[int]) -> np.ndarray:
		"""Return the membership mask of the subgroup generated by gens."""
		mask = np.zeros(self.order, dtype=bool)
		mask[0] = True
		gens = np.unique(np.asarray(list(gens), dtype=np.int64))
		if gens.size == 0:
			return mask

		frontier = np.asarray([0], dtype=np.int64)
		while frontier.size:
			candidates = np.unique(self.mul_array(frontier[:, None], gens[None, :]).ravel())
			frontier = candidates[~mask[candidates]]
			mask[frontier] = True
		return mask

	def element_orders(self) -> np.ndarray:
		"""Return the order of every element."""
		if self._orders is None:
			xs = self.elements()
			orders = np.ones(self.order, dtype=np.int64)
			current = xs.copy()
			pending = current != 0
			step = 1
			while pending.any():
				step += 1
				current[pending] = self.mul_array(current[pending], xs[pending])
				done = pending & (current == 0)
				orders[done] = step
				pending &= ~done
				if step > self.order:
					raise NonGroup("element order exceeds group order")
			orders[0] = 1
			self._orders = orders
		return self._orders

	def exponent(self) -> int:
		"""Return the lcm of element orders."""
		return int(reduce(np.lcm, self.element_orders().tolist(), 1))

	def is_abelian(self) -> bool:
		"""Return whether the generators commute pairwise."""
		if self._abelian is None:
			gens = np.asarray(self.generators, dtype=np.int64)
			if gens.size == 0:
				self._abelian = True
			else:
				left = self.mul_array(gens[:, None], gens[None, :])
				right = self.mul_array(gens[None, :], gens[:, None])
				self._abelian = bool(np.array_equal(left, right))
		return self._abelian

	def evaluate(self, word: Word) -> int:
		"""Evaluate a word over the generator labels."""
		result = 0
		for name, exponent in word:
			if name not in self.gen_labels:
				raise KeyError(f"unknown generator {name!r}")
			result = self.mul(result, self.power(self.gen_labels[name], exponent))
		return result

def closure_from_generators(gens: Sequence[Hashable],
                            mul: Callable[[Hashable, Hashable], Hashable],
                            name: str = "G",
                            labels: Optional[Sequence[str]] = None,
                            limits: Optional[Limits] = None,
                           ) -> FiniteGroup:
	"""
	Enumerate the group generated by gens under mul.

	Elements are found breadth-first by right multiplication with the
	generators, starting from the identity, which is found as the idempotent
	among the powers of the first generator.
	"""
	limits = get_limits(limits)
	gens = list(gens)
	if not gens:
		raise ValueError("generator set must be nonempty")

	identity = _find_identity(gens[0], mul, limits.max_cayley)

	elements: List[Hashable] = [identity]
	index = {identity: 0}
	parents = [0]
	parent_gens = [0]
	rows: List[List[int]] = []

	position = 0
	while position < len(elements):
		x = elements[position]
		row = []
		for j, g in enumerate(gens):
			y = mul(x, g)
			if y not in index:
				if len(elements) >= limits.max_cayley:
					raise CapExceeded("closure", len(elements) + 1, limits.max_cayley)
				index[y] = len(elements)
				elements.append(y)
				parents.append(position)
				parent_gens.append(j)
			row.append(index[y])
		rows.append(row)
		position += 1

	logger.debug("closure of %d generators has %d elements", len(gens), len(elements))

	gen_labels = None
	if labels is not None:
		if len(labels) != len(gens):
			raise ValueError("one label per generator is required")
		gen_labels = {label: index[g] for label, g in zip(labels, gens)}

	return FiniteGroup.from_right_multiplication(
		np.asarray(rows, dtype=np.int64), parents, parent_gens, limits=limits,
		name=name,
		generators=[index[g] for g in gens],
		gen_labels=gen_labels,
		element_labels=[str(e) for e in elements],
	)

def _find_identity(g: Hashable, mul: Callable[[Hashable, Hashable], Hashable], cap: int) -> Hashable:
	seen = set()
	power = g
	while power not in seen:
		if mul(power, power) == power:
			return power
		seen.add(power)
		if len(seen) > cap:
			raise CapExceeded("generator order", len(seen), cap)
		power = mul(power, g)
	raise NonGroup("no identity among the powers of the first generator")
