#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for pair reports and their verdicts."""

import json

import pytest

from pairmult.exceptions import NotPGroup
from pairmult.groups.constructions import factor_subgroups
from pairmult.groups.library import cyclic, permutation_group
from pairmult.groups.pair import Pair
from pairmult.groups.series import center
from pairmult.groups.subgroup import trivial_subgroup, whole_group
from pairmult.utils.config import Limits
from pairmult.verify.report import THEOREM_VERDICTS, UNAVAILABLE, UNTESTED, analyze_pair

def test_rotations_of_d4(d4, limits):
	N, K = factor_subgroups(d4)
	report = analyze_pair(Pair(d4, N, K), limits=limits)
	assert (report.p, report.e, report.pair_class, report.m, report.exp_N, report.class_G) == (2, 2, 2, 1, 4, 2)
	assert report.exp_M == 2
	assert report.bounds.thm27 == 8
	assert report.flags == {"powerfully_embedded": False, "class_le_p_minus_1": False, "split": True}
	assert report.verdicts == {
		"thm27_holds": True,
		"cor28_applicable": False,
		"cor28_holds": None,
		"thm311_applicable": False,
		"thm311_holds": None,
		"divides_order_N": True,
		"divides_exp_N": True,
		"split_sum_holds": True,
	}
	assert report.violations() == []
	assert not report.is_untested()

def test_complement_is_searched(d4, limits):
	N, _ = factor_subgroups(d4)
	report = analyze_pair(Pair(d4, N), limits=limits)
	assert report.flags["split"]
	assert report.verdicts["split_sum_holds"] is True

def test_whole_group(q8, limits):
	report = analyze_pair(Pair(q8, whole_group(q8)), limits=limits)
	assert report.exp_M == 1
	assert report.verdicts["split_sum_holds"] is None
	assert all(report.verdicts[name] is True for name in ("thm27_holds", "divides_order_N", "divides_exp_N"))

def test_untested_without_complement(q8, limits):
	report = analyze_pair(Pair(q8, center(whole_group(q8))), limits=limits)
	assert report.is_untested()
	assert report.error
	assert report.pair_class == 1
	assert report.flags["class_le_p_minus_1"]
	assert report.verdicts["thm27_holds"] == UNTESTED
	assert report.verdicts["cor28_holds"] == UNTESTED
	assert report.verdicts["split_sum_holds"] is None
	assert report.violations() == []
	assert report.to_dict()["multiplier"] == UNAVAILABLE

def test_untested_beyond_complement_cap(d4):
	N, _ = factor_subgroups(d4)
	report = analyze_pair(Pair(d4, N), limits=Limits(max_complement=4))
	assert report.is_untested()
	assert "complement search" in report.error

def test_trivial_subgroup(d4, limits):
	report = analyze_pair(Pair(d4, trivial_subgroup(d4)), limits=limits)
	assert (report.e, report.pair_class, report.exp_M) == (0, 0, 1)
	assert report.violations() == []

def test_needs_a_p_group(limits):
	s3 = permutation_group(3, [[1, 0, 2], [1, 2, 0]])
	with pytest.raises(NotPGroup):
		analyze_pair(Pair(s3, whole_group(s3)), limits=limits)
	z1 = cyclic(1)
	with pytest.raises(NotPGroup):
		analyze_pair(Pair(z1, whole_group(z1)), limits=limits)

def test_wrong_prime(d4, limits):
	with pytest.raises(NotPGroup):
		analyze_pair(Pair(d4, whole_group(d4)), p=3, limits=limits)

def test_json_document(d4, limits):
	N, K = factor_subgroups(d4)
	report = analyze_pair(Pair(d4, N, K), limits=limits)
	document = json.loads(report.to_json())
	assert list(document) == [
		"group_name", "order_G", "order_N", "p", "e", "pair_class", "m", "exp_N", "class_G",
		"multiplier", "exp_M", "bounds", "flags", "verdicts", "known_counterexample", "error",
	]
	assert document["multiplier"]["torsion"] == [2]
	assert document["bounds"] == {"thm27": 8, "ellis": 4, "moravec": 16, "jones": 4}
	assert set(THEOREM_VERDICTS) <= set(document["verdicts"])
