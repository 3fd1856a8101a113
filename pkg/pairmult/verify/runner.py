#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Corpus verification runs."""

from concurrent.futures import ProcessPoolExecutor
import json
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import multiplicity

from pairmult import __version__
from pairmult.exceptions import PairmultError
from pairmult.groups.constructions import sylow_decomposition
from pairmult.groups.pair import Pair
from pairmult.groups.powers import group_prime
from pairmult.groups.series import pair_class
from pairmult.groups.subgroup import Subgroup
from pairmult.multiplier.pair import pair_multiplier
from pairmult.utils.config import Limits, get_limits
from pairmult.verify.bounds import bound_formulas
from pairmult.verify.corpus import CorpusEntry, builtin_corpus
from pairmult.verify.report import THEOREM_VERDICTS, UNAVAILABLE, analyze_pair
from pairmult.zlinalg.abelian import AbelianStructure

logger = logging.getLogger(__name__)

REPORT_VERSION = 1

KIND_REPORT = "report"
KIND_SYLOW = "sylow"
KIND_ERROR = "error"

def _local(S: Subgroup, H: Subgroup) -> List[int]:
	"""Return the indices of S intersected with H inside S.as_group()."""
	return np.searchsorted(S.members, S.intersection(H).members).tolist()

def sylow_pair_check(pair: Pair, limits: Optional[Limits] = None) -> dict:
	"""
	Compare M(G,N) with the sum of M(S, S n N) over the Sylow subgroups S.

	G must be nilpotent and the pair split; each Sylow pair is split by
	S n K. The exponent of M(G,N) is also checked against the product of
	the Sylow bounds p^(e + m(k-1)), where exp(S n N) = p^e and k is the
	class of the Sylow pair.
	"""
	limits = get_limits(limits)
	if pair.k_sub is None:
		raise ValueError("the Sylow check needs a complement")

	total = pair_multiplier(pair, limits=limits)
	product = AbelianStructure()
	exponent_bound = 1
	parts = []
	for S in sylow_decomposition(pair.group):
		p = group_prime(S.order)
		group, _ = S.as_group(name=f"{pair.group.name}_S{S.order}", limits=limits)
		n_sub = Subgroup(group, _local(S, pair.n_sub))
		k_sub = Subgroup(group, _local(S, pair.k_sub))
		sylow_pair = Pair(group, n_sub, k_sub)
		part = pair_multiplier(sylow_pair, limits=limits)
		product = product.direct_sum(part.structure)

		exp_N = n_sub.exponent()
		bounds = bound_formulas(p, int(multiplicity(p, exp_N)) if exp_N > 1 else 0, pair_class(sylow_pair))
		exponent_bound *= bounds.thm27
		parts.append({
			"p": p,
			"order": S.order,
			"order_N": n_sub.order,
			"e": bounds.e,
			"pair_class": bounds.k,
			"exponent_bound": bounds.thm27,
			"multiplier": part.to_dict(),
		})

	return {
		"group_name": pair.group.name,
		"multiplier": total.to_dict(),
		"sylow": parts,
		"exponent_bound": exponent_bound,
		"holds": product == total.structure,
		"bound_holds": exponent_bound % total.exponent == 0,
	}

def _sylow_violations(document: dict) -> List[str]:
	return [name for name in ("holds", "bound_holds") if document[name] is False]

def verify_entry(entry: CorpusEntry, limits: Optional[Limits] = None) -> Tuple[str, dict]:
	"""Verify one entry, returning its kind and its JSON document."""
	try:
		pair = entry.pair(limits=limits)
		if entry.sylow:
			document = sylow_pair_check(pair, limits=limits)
			kind = KIND_SYLOW
		else:
			report = analyze_pair(pair, known_counterexample=entry.known_counterexample, limits=limits)
			document = report.to_dict()
			kind = KIND_REPORT
	except PairmultError as e:
		logger.error("%s failed: %s", entry.name, e)
		return KIND_ERROR, {"name": entry.name, "error": str(e)}

	logger.info("verified %s", entry.name)
	return kind, {"name": entry.name, **document}

def _violations(document: dict) -> List[str]:
	return [name for name in THEOREM_VERDICTS if document["verdicts"].get(name) is False]

def run_corpus(entries: Optional[Sequence[CorpusEntry]] = None, out: Optional[str] = None,
               max_order: Optional[int] = None, jobs: int = 1, limits: Optional[Limits] = None) -> dict:
	"""
	Verify corpus entries and return the report document.

	Entries above max_order are skipped. With jobs > 1 entries are verified
	in a process pool; results are sorted by entry name either way, so the
	output does not depend on scheduling. The document is written to out
	when a path is given.
	"""
	limits = get_limits(limits)
	if entries is None:
		entries = builtin_corpus()
	entries = [entry for entry in entries if max_order is None or entry.order <= max_order]
	logger.info("verifying %d corpus entries with %d job(s)", len(entries), jobs)

	if jobs > 1:
		with ProcessPoolExecutor(max_workers=jobs) as executor:
			results = list(executor.map(verify_entry, entries, [limits] * len(entries)))
	else:
		results = [verify_entry(entry, limits) for entry in entries]

	results.sort(key=lambda result: result[1]["name"])
	reports = [document for kind, document in results if kind != KIND_SYLOW]
	sylow_checks = [document for kind, document in results if kind == KIND_SYLOW]

	violations = 0
	untested = 0
	for document in reports:
		if "verdicts" not in document or document["multiplier"] == UNAVAILABLE:
			untested += 1
		elif _violations(document):
			violations += 1
			logger.error("%s violates %s", document["name"], ", ".join(_violations(document)))
	for document in sylow_checks:
		if _sylow_violations(document):
			violations += 1
			logger.error("%s violates %s", document["name"], ", ".join(_sylow_violations(document)))

	result = {
		"version": REPORT_VERSION,
		"pairmult": __version__,
		"entries": reports,
		"summary": {
			"checked": len(reports) + len(sylow_checks) - untested,
			"violations": violations,
			"untested": untested,
		},
		"sylow_checks": sylow_checks,
	}

	if out is not None:
		with open(out, "w") as f:
			f.write(dump_report(result))
	return result

def dump_report(document: dict) -> str:
	return json.dumps(document, indent=2) + "\n"

def exit_status(document: dict) -> int:
	"""Return 1 if the run contradicted a theorem, else 0."""
	return 1 if document["summary"]["violations"] else 0
