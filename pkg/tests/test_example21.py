#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for the order 2048 group where exp(M(G,N)) does not divide exp(N)."""

import pytest

from pairmult.groups.library import EXAMPLE21_DOCUMENT, example21_presentation
from pairmult.pc.presentation import PcPresentation
from pairmult.verify import example21
from pairmult.verify.example21 import Fact, reproduce_example21

def test_document_shape():
	pc = EXAMPLE21_DOCUMENT["pc"]
	assert pc["orders"] == [2, 4, 2, 4, 4, 4, 2]
	assert pc["powers"] == {}
	assert example21_presentation().order() == 2048

@pytest.mark.slow
def test_reproduction():
	reproduction = reproduce_example21()
	mismatches = [fact for fact in reproduction.facts if not fact.holds]
	assert mismatches == []
	assert reproduction.reproduced

	report = reproduction.report
	assert report.known_counterexample
	assert report.multiplier.structure.torsion == [2, 4, 8]
	assert report.exp_M == 8 and report.exp_N == 4
	assert report.verdicts["divides_exp_N"] is False
	assert report.verdicts["thm311_holds"] is None
	assert report.violations() == []

def test_inconsistent_presentation_is_a_fact(monkeypatch):
	# [g2,g1] = g2 with g2 of order 2 fails the overlap check
	broken = PcPresentation(["g1", "g2"], [2, 2], commutators={(1, 0): (0, 1)})
	monkeypatch.setattr(example21, "example21_presentation", lambda limits=None: broken)
	reproduction = example21.reproduce_example21()
	assert reproduction.facts == [Fact("consistent", True, False)]
	assert not reproduction.reproduced
	assert reproduction.report is None
