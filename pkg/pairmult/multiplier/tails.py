#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Schur multipliers of pc presentations by the tails method."""

import logging
from typing import List, Optional

from pairmult.exceptions import Inconsistent, RankMismatch
from pairmult.pc.consistency import overlaps
from pairmult.pc.presentation import PcPresentation
from pairmult.utils.config import Limits
from pairmult.zlinalg.abelian import AbelianStructure, abelian_from_relations

logger = logging.getLogger(__name__)

def tail_relations(presentation: PcPresentation, limits: Optional[Limits] = None) -> List[List[int]]:
	"""
	Return the relations among tails forced by the overlaps.

	Every relation of the presentation gets a central tail of infinite
	order; each overlap, collected both ways, equates two tail vectors.
	"""
	relations = []
	for overlap in overlaps(presentation, tails=True, limits=limits):
		if not overlap.agrees():
			raise Inconsistent(
				f"overlap {overlap.description} collects to {presentation.format(overlap.left.exponents)} "
				f"and {presentation.format(overlap.right.exponents)}")
		relation = overlap.tail_relation()
		if any(relation):
			relations.append(relation)
	return relations

def tails_module(presentation: PcPresentation, limits: Optional[Limits] = None) -> AbelianStructure:
	"""Return the abelian group on the tails modulo the overlap relations."""
	relations = tail_relations(presentation, limits=limits)
	module = abelian_from_relations(presentation.relation_count, relations)
	logger.debug("tails module of %s on %d tails: %s", presentation.names, presentation.relation_count, module)
	return module

def multiplier_pc_tails(presentation: PcPresentation, limits: Optional[Limits] = None) -> AbelianStructure:
	"""
	Return the Schur multiplier of the group presented by a consistent presentation.

	The tails module has free rank n, the generator count, and its torsion
	is the multiplier.
	"""
	module = tails_module(presentation, limits=limits)
	if module.free_rank != presentation.n:
		raise RankMismatch(
			f"tails module has free rank {module.free_rank}, expected {presentation.n}")
	logger.info("M(%s) = %s by the tails method", " ".join(presentation.names), module.torsion_subgroup())
	return module.torsion_subgroup()
