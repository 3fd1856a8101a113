#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for the Smith normal form."""

import random

import pytest

from pairmult.zlinalg.matrix import SparseIntMatrix
from pairmult.zlinalg.smith import determinant, smith_normal_form, verify_smith_form

@pytest.mark.parametrize("dense, invariants", [
	([[2, 0], [0, 3]], [1, 6]),
	([[2, 4], [0, 4]], [2, 4]),
	([[0, 0], [0, 0]], []),
	([[6]], [6]),
	([[-6]], [6]),
	([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
	([[1, 2, 3], [4, 5, 6], [7, 8, 9]], [1, 3]),
])
def test_invariants(dense, invariants):
	form = smith_normal_form(dense)
	assert form.invariants == invariants
	assert form.rank == len(invariants)
	assert verify_smith_form(dense, form)

def test_sparse_input():
	matrix = SparseIntMatrix.from_dense([[0, 4], [6, 0], [0, 0]])
	form = smith_normal_form(matrix)
	assert form.invariants == [2, 12]
	assert len(form.U) == 3 and len(form.V) == 2
	assert verify_smith_form(matrix, form)

def test_without_transforms():
	form = smith_normal_form([[4, 6]], transforms=False)
	assert form.invariants == [2]
	assert form.U is None and form.V is None
	with pytest.raises(ValueError):
		verify_smith_form([[4, 6]], form)

def test_column_transforms_only():
	form = smith_normal_form([[4, 6], [2, 2]], left=False)
	assert form.U is None
	assert form.V is not None and form.V_inv is not None

SEEDS = range(100)

def _random_sparse(rng, rows, cols, density=0.3):
	entries = {}
	for i in range(rows):
		for j in range(cols):
			if rng.random() < density:
				entries[(i, j)] = rng.choice([-1, 1]) * rng.randint(1, 12)
	return SparseIntMatrix(rows, cols, entries)

@pytest.mark.parametrize("seed", SEEDS)
def test_random_sparse_matrices(seed):
	rng = random.Random(seed)
	matrix = _random_sparse(rng, rng.randint(1, 7), rng.randint(1, 7))
	form = smith_normal_form(matrix)
	assert verify_smith_form(matrix, form)
	assert form.invariants == smith_normal_form(matrix.transpose()).invariants

@pytest.mark.parametrize("seed", range(20))
def test_invariants_multiply_to_determinant(seed):
	rng = random.Random(1000 + seed)
	n = rng.randint(1, 5)
	dense = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
	product = 1
	for d in smith_normal_form(dense, transforms=False).invariants:
		product *= d
	det = abs(determinant(dense))
	assert (product if det else 0) == det

def test_determinant():
	assert determinant([[2, 1], [1, 1]]) == 1
	assert determinant([]) == 1
