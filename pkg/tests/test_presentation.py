#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for pc presentations and collection."""

import pytest

from pairmult.exceptions import BadOrder, IndexDiscipline, NonTermination, PcSyntaxError
from pairmult.groups.library import example21_presentation
from pairmult.pc.collector import Collector
from pairmult.pc.parser import parse_pc_file
from pairmult.pc.presentation import PcPresentation
from pairmult.utils.config import Limits

def test_collect_heisenberg(heisenberg_pc):
	assert heisenberg_pc.collect([1, 0]) == (1, 1, 1)
	assert heisenberg_pc.collect([0, 1]) == (1, 1, 0)
	assert heisenberg_pc.collect([1, 1, 1]) == (0, 0, 0)
	assert heisenberg_pc.word("g2 g1") == (1, 1, 1)

def test_collect_power_overflow(z4_pc):
	assert z4_pc.collect([0] * 5) == (1,)
	assert z4_pc.invert((3,)) == (1,)

def test_inverse_and_power(heisenberg_pc):
	x = heisenberg_pc.word("g1 g2")
	assert heisenberg_pc.multiply(x, heisenberg_pc.invert(x)) == (0, 0, 0)
	assert heisenberg_pc.power(x, 3) == (0, 0, 0)
	assert heisenberg_pc.power(x, -1) == heisenberg_pc.invert(x)

def test_collect_example21_relation():
	presentation = example21_presentation()
	x1, x2 = presentation.index("x1"), presentation.index("x2")
	assert presentation.collect([x2, x1]) == (0, 0, 1, 3, 0, 0, 0)

def test_from_words_normalises():
	presentation = PcPresentation.from_words(["y", "x"], [2, 4], powers={0: [(1, 2)]}, commutators={(1, 0): [(1, -2)]})
	assert presentation.power_rhs[0] == (0, 2)
	assert presentation.comm_rhs[(1, 0)] == (0, 2)

def test_bad_relative_order():
	with pytest.raises(BadOrder):
		PcPresentation(["g1", "g2"], [2, 1])

def test_index_discipline():
	with pytest.raises(IndexDiscipline):
		PcPresentation(["g1", "g2"], [2, 2], commutators={(0, 1): (0, 1)})
	with pytest.raises(IndexDiscipline):
		PcPresentation(["g1", "g2"], [2, 2], powers={1: (1, 0)})
	with pytest.raises(IndexDiscipline):
		PcPresentation.from_words(["g1", "g2"], [2, 2], commutators={(1, 0): [(0, 1)]})

def test_unreduced_exponent():
	with pytest.raises(ValueError):
		PcPresentation(["g1", "g2"], [2, 2], powers={0: (0, 3)})

def test_tail_indices(heisenberg_pc):
	assert heisenberg_pc.relation_count == 6
	assert [heisenberg_pc.power_tail(i) for i in range(3)] == [0, 1, 2]
	assert heisenberg_pc.commutator_tail(1, 0) == 3
	assert heisenberg_pc.commutator_tail(2, 0) == 4
	assert heisenberg_pc.commutator_tail(2, 1) == 5

def test_collection_step_cap(z4_pc):
	collector = Collector(z4_pc, limits=Limits(collect_step_cap=3))
	with pytest.raises(NonTermination):
		collector.collect([0] * 4)

def test_relations_and_dict(heisenberg_pc):
	assert list(heisenberg_pc.relations()) == [("[g2,g1]", (0, 0, 1))]
	document = heisenberg_pc.to_dict()
	assert document["commutators"] == {"g2,g1": "g3"}
	assert PcPresentation.from_dict(document) == heisenberg_pc

def test_parse_pc_file():
	text = '{"pc": {"generators": ["g1", "g2"], "orders": [2, 2], "commutators": {"g2,g1": "1"}}}'
	presentation = parse_pc_file(text)
	assert presentation.order() == 4
	assert presentation.comm_rhs == {}

@pytest.mark.parametrize("text", [
	'{"generators": ["g1"], "orders": [2]',
	'[1, 2]',
	'{"generators": "g1", "orders": [2]}',
	'{"generators": ["g1"], "orders": [true]}',
	'{"generators": ["g1"], "orders": [2], "powers": {"g2": "1"}}',
	'{"generators": ["g1", "g2"], "orders": [2, 2], "commutators": {"g2": "1"}}',
	'{"generators": ["g1"], "orders": [2], "powers": {"g1": 3}}',
])
def test_parse_pc_file_errors(text):
	with pytest.raises(PcSyntaxError):
		parse_pc_file(text)
