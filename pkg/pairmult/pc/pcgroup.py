#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Finite groups given by consistent pc presentations."""

import logging
from typing import List, Optional, Sequence

import numpy as np

from pairmult.exceptions import Inconsistent
from pairmult.groups.finitegroup import FiniteGroup
from pairmult.pc.collector import Exponents
from pairmult.pc.consistency import consistency_check
from pairmult.pc.presentation import PcPresentation
from pairmult.utils.config import Limits, get_limits

logger = logging.getLogger(__name__)

def radices(presentation: PcPresentation) -> List[int]:
	"""Return the place values of the mixed-radix ranking, g_1 most significant."""
	places = [1] * presentation.n
	for i in range(presentation.n - 2, -1, -1):
		places[i] = places[i + 1] * presentation.orders[i + 1]
	return places

def rank(presentation: PcPresentation, exponents: Sequence[int]) -> int:
	"""Return the element index of a normal word."""
	return sum(e * place for e, place in zip(exponents, radices(presentation)))

def unrank(presentation: PcPresentation, x: int) -> Exponents:
	"""Return the normal word of an element index."""
	exponents = []
	for place, order in zip(radices(presentation), presentation.orders):
		exponents.append((x // place) % order)
	return tuple(exponents)

def pc_to_group(presentation: PcPresentation, name: str = "G", check: bool = True,
                limits: Optional[Limits] = None) -> FiniteGroup:
	"""
	Return the group defined by a consistent presentation.

	Element indices rank normal words in mixed radix, so index 0 is the
	identity, and multiplication is collection.
	"""
	limits = get_limits(limits)
	if check:
		report = consistency_check(presentation, limits=limits)
		if not report.consistent:
			description, left, right = report.failures[0]
			raise Inconsistent(
				f"{len(report.failures)} overlaps disagree, first {description}: "
				f"{presentation.format(left)} != {presentation.format(right)}")

	n = presentation.n
	order = presentation.order()
	places = radices(presentation)
	collector = presentation.collector(limits)

	right_table = np.empty((order, n), dtype=np.int64)
	parents = np.zeros(order, dtype=np.int64)
	parent_gens = np.zeros(order, dtype=np.int64)
	labels = []

	for x in range(order):
		exponents = unrank(presentation, x)
		labels.append(presentation.format(exponents))
		for j in range(n):
			product = collector.apply(collector.state(exponents), [j]).exponents
			right_table[x, j] = sum(e * place for e, place in zip(product, places))

		if x:
			last = max(k for k in range(n) if exponents[k])
			parents[x] = x - places[last]
			parent_gens[x] = last

	logger.info("built %s of order %d from a %d-generator presentation", name, order, n)

	group = FiniteGroup.from_right_multiplication(
		right_table, parents, parent_gens, limits=limits,
		name=name,
		generators=[places[i] for i in range(n)],
		gen_labels={label: places[i] for i, label in enumerate(presentation.names)},
		element_labels=labels,
	)
	group.presentation = presentation
	return group
