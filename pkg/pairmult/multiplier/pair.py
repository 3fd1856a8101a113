#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Schur multipliers of groups and of split pairs."""

from dataclasses import dataclass
import logging
from typing import Optional

from pairmult.exceptions import CapExceeded, NoComplement
from pairmult.groups.constructions import find_complement, retraction
from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.pair import Pair
from pairmult.multiplier.bar import h2_bar, induced_h2
from pairmult.multiplier.tails import multiplier_pc_tails
from pairmult.pc.refine import pc_presentation_from_group
from pairmult.utils.config import Limits, get_limits
from pairmult.zlinalg.abelian import AbelianStructure, abelian_hom_kernel

logger = logging.getLogger(__name__)

BACKEND_BAR = "bar"
BACKEND_PC = "pc-tails"
BACKEND_SPLIT_SUM = "split-sum"

BACKENDS = ("auto", "bar", "pc")

@dataclass(frozen=True)
class PairMultiplier:
	"""A multiplier together with the backend that computed it."""
	structure: AbelianStructure
	backend: str

	@property
	def exponent(self) -> int:
		return self.structure.exponent()

	def to_dict(self) -> dict:
		document = self.structure.to_dict()
		document["exponent"] = self.exponent
		document["backend"] = self.backend
		return document

def schur_multiplier(G: FiniteGroup, backend: str = "auto", limits: Optional[Limits] = None) -> PairMultiplier:
	"""
	Return M(G).

	"auto" uses the bar resolution up to the bar cap and the tails method
	beyond it. The tails method runs on the presentation G was built from,
	or on one read off G.
	"""
	limits = get_limits(limits)
	if backend not in BACKENDS:
		raise ValueError(f"unknown backend {backend!r}, expected one of {', '.join(BACKENDS)}")

	if backend == "bar" or (backend == "auto" and G.order <= limits.max_bar):
		return PairMultiplier(h2_bar(G, limits=limits).structure, BACKEND_BAR)

	presentation = G.presentation
	if presentation is None:
		presentation, _ = pc_presentation_from_group(G)
	return PairMultiplier(multiplier_pc_tails(presentation, limits=limits), BACKEND_PC)

def pair_multiplier(pair: Pair, limits: Optional[Limits] = None) -> PairMultiplier:
	"""
	Return M(G,N) for N = G or for a split pair.

	For G = N x| K it is the kernel of the map M(G) -> M(K) induced by the
	retraction onto K, computed in the bar resolution when |G| is within
	the bar cap. Beyond it only the case of trivial M(K) is handled, where
	M(G,N) = M(G).
	"""
	limits = get_limits(limits)
	G = pair.group

	if pair.is_whole():
		return schur_multiplier(G, limits=limits)
	if pair.n_sub.is_trivial():
		return PairMultiplier(AbelianStructure(), BACKEND_SPLIT_SUM)

	k_sub = pair.k_sub
	if k_sub is None:
		k_sub = find_complement(G, pair.n_sub, limits=limits)
		if k_sub is None:
			raise NoComplement(f"N of order {pair.n_sub.order} has no complement in {G.name}")
		pair = pair.with_complement(k_sub)

	if G.order <= limits.max_bar:
		projection = retraction(pair, limits=limits)
		h2_g = h2_bar(G, limits=limits)
		h2_k = h2_bar(projection.codomain, limits=limits)
		matrix = induced_h2(projection, h2_g, h2_k)
		kernel = abelian_hom_kernel(h2_g.structure, h2_k.structure, matrix)
		logger.info("M(%s, N%d) = %s from the bar resolution", G.name, pair.n_sub.order, kernel)
		return PairMultiplier(kernel, BACKEND_BAR)

	K, _ = k_sub.as_group(name=f"{G.name}_K", limits=limits)
	if not schur_multiplier(K, limits=limits).structure.is_trivial():
		raise CapExceeded("bar resolution", G.order, limits.max_bar)

	structure = schur_multiplier(G, backend="pc", limits=limits).structure
	logger.info("M(%s, N%d) = M(%s) = %s since M(K) is trivial", G.name, pair.n_sub.order, G.name, structure)
	return PairMultiplier(structure, BACKEND_SPLIT_SUM)
