#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Shared fixtures."""

import random

import pytest

from pairmult.groups.library import abelian, dihedral, heisenberg27, quaternion
from pairmult.pc.presentation import PcPresentation
from pairmult.utils.config import Limits

@pytest.fixture
def limits():
	"""Default limits, whatever the environment says."""
	return Limits()

@pytest.fixture
def rng():
	return random.Random(20260417)

@pytest.fixture(scope="session")
def d4():
	return dihedral(4, limits=Limits())

@pytest.fixture(scope="session")
def q8():
	return quaternion(8, limits=Limits())

@pytest.fixture(scope="session")
def h27():
	return heisenberg27(limits=Limits())

@pytest.fixture(scope="session")
def z2z4():
	return abelian([2, 4], limits=Limits())

@pytest.fixture
def heisenberg_pc():
	"""g1, g2, g3 of order 3 with [g2,g1] = g3."""
	return PcPresentation(["g1", "g2", "g3"], [3, 3, 3], commutators={(1, 0): (0, 0, 1)})

@pytest.fixture
def z4_pc():
	return PcPresentation(["g1"], [4])
