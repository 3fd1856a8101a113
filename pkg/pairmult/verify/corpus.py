#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Built-in corpus of pairs."""

from dataclasses import dataclass
from functools import partial
from typing import Callable, List, Optional, Tuple

from sympy.utilities.iterables import partitions

from pairmult.groups.constructions import direct_product, factor_subgroups
from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.library import (EXAMPLE21_DOCUMENT, abelian, cyclic, dihedral, example21, extraspecial32,
                                     heisenberg27, m27, modular16, quaternion, semidihedral16, subgroup_from_text,
                                     z4_semidirect_z4)
from pairmult.groups.pair import Pair
from pairmult.groups.subgroup import whole_group
from pairmult.utils.config import Limits

Builder = Callable[..., FiniteGroup]

@dataclass(frozen=True)
class CorpusEntry:
	"""
	Class representing a corpus pair and how to rebuild it.

	The recipe is a group builder plus the way N and K are read off the
	result: "factors" takes the two factors of a product, "whole" is
	N = G, otherwise n_words and k_words are word-strings in the
	generator names of G. Recipes are plain functions and partials so an
	entry can be sent to a worker process.
	"""
	name: str
	order: int
	build: Builder
	recipe: str = "factors"
	n_words: Optional[str] = None
	k_words: Optional[str] = None
	known_counterexample: bool = False
	sylow: bool = False

	def pair(self, limits: Optional[Limits] = None) -> Pair:
		G = self.build(limits=limits)
		if self.recipe == "whole":
			return Pair(G, whole_group(G))
		if self.recipe == "factors":
			N, K = factor_subgroups(G)
			return Pair(G, N, K)

		N = subgroup_from_text(G, self.n_words, source=self.name)
		K = subgroup_from_text(G, self.k_words, source=self.name) if self.k_words is not None else None
		return Pair(G, N, K)

def _direct(left: Builder, right: Builder, name: str, limits: Optional[Limits] = None) -> FiniteGroup:
	return direct_product(left(limits=limits), right(limits=limits), name=name, limits=limits)

def _cyclic(n: int, label: str = "a", limits: Optional[Limits] = None) -> FiniteGroup:
	return cyclic(n, label=label)

def abelian_invariants(p: int, max_order: int) -> List[Tuple[int, ...]]:
	"""Return the invariant lists of the abelian p-groups of order up to max_order."""
	result = []
	n = 1
	while p ** n <= max_order:
		for partition in partitions(n):
			parts = sorted(part for part, count in partition.items() for _ in range(count))
			result.append(tuple(p ** part for part in parts))
		n += 1
	return result

def _abelian_entries(p: int, max_order: int) -> List[CorpusEntry]:
	entries = []
	for invariants in abelian_invariants(p, max_order):
		build = partial(abelian, invariants)
		name = "x".join(f"Z{d}" for d in invariants)
		order = 1
		for d in invariants:
			order *= d
		entries.append(CorpusEntry(f"{name}/G", order, build, recipe="whole"))
		if len(invariants) > 1:
			entries.append(CorpusEntry(f"{name}/N", order, build))
	return entries

def builtin_corpus() -> List[CorpusEntry]:
	"""Return the built-in corpus, sorted by name."""
	entries = _abelian_entries(2, 32) + _abelian_entries(3, 27) + _abelian_entries(5, 25)

	d4 = partial(dihedral, 4)
	q8 = partial(quaternion, 8)
	entries += [
		CorpusEntry("D4/G", 8, d4, recipe="whole"),
		CorpusEntry("D4/<r>", 8, d4),
		CorpusEntry("Q8/G", 8, q8, recipe="whole"),
		CorpusEntry("Q8/Z", 8, q8, recipe="words", n_words="x^2"),
		CorpusEntry("D8/G", 16, partial(dihedral, 8), recipe="whole"),
		CorpusEntry("D8/<r>", 16, partial(dihedral, 8)),
		CorpusEntry("Q16/G", 16, partial(quaternion, 16), recipe="whole"),
		CorpusEntry("SD16/G", 16, semidihedral16, recipe="whole"),
		CorpusEntry("SD16/<x>", 16, semidihedral16),
		CorpusEntry("M16/G", 16, modular16, recipe="whole"),
		CorpusEntry("M16/<x>", 16, modular16),
		CorpusEntry("Z4:Z4/G", 16, z4_semidirect_z4, recipe="whole"),
		CorpusEntry("Z4:Z4/<x>", 16, z4_semidirect_z4),
		CorpusEntry("D4xZ2/D4", 16, partial(_direct, d4, partial(_cyclic, 2), "D4xZ2")),
		CorpusEntry("Q8xZ2/Q8", 16, partial(_direct, q8, partial(_cyclic, 2), "Q8xZ2")),
		CorpusEntry("E32/G", 32, extraspecial32, recipe="whole"),
		CorpusEntry("E32/N8", 32, extraspecial32),
		CorpusEntry("H27/G", 27, heisenberg27, recipe="whole"),
		CorpusEntry("H27/N9", 27, heisenberg27),
		CorpusEntry("M27/G", 27, m27, recipe="whole"),
		CorpusEntry("M27/<x>", 27, m27),
		CorpusEntry("Q8xZ3/Q8", 24, partial(_direct, q8, partial(_cyclic, 3), "Q8xZ3"), sylow=True),
		CorpusEntry("D4xZ3/<r,a>", 24, partial(_direct, d4, partial(_cyclic, 3), "D4xZ3"),
		            recipe="words", n_words="r a", k_words="s", sylow=True),
		CorpusEntry("example21/N", 2048, example21, recipe="words",
		            n_words=EXAMPLE21_DOCUMENT["subgroups"]["N"], k_words=EXAMPLE21_DOCUMENT["complements"]["N"],
		            known_counterexample=True),
	]
	return sorted(entries, key=lambda entry: entry.name)

def select(entries: List[CorpusEntry], max_order: Optional[int] = None,
           names: Optional[List[str]] = None) -> List[CorpusEntry]:
	"""Return the entries of order at most max_order, restricted to the given names."""
	selected = [entry for entry in entries if max_order is None or entry.order <= max_order]
	if names is not None:
		known = {entry.name for entry in entries}
		unknown = [name for name in names if name not in known]
		if unknown:
			raise ValueError(f"unknown corpus entries: {', '.join(unknown)}")
		selected = [entry for entry in selected if entry.name in names]
	return selected
