#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for word-strings."""

import pytest

from pairmult.exceptions import PcSyntaxError
from pairmult.pc.words import format_letters, format_word, parse_word

NAMES = ["a", "x1", "b"]

def test_parse_terms():
	assert parse_word("a x1^2 b^-1", NAMES) == [(0, 1), (1, 2), (2, -1)]
	assert parse_word("  a   a ", NAMES) == [(0, 1), (0, 1)]

@pytest.mark.parametrize("text", ["", "1", "   "])
def test_identity(text):
	assert parse_word(text, NAMES) == []

@pytest.mark.parametrize("text, position", [("c", 0), ("a+b", 1), ("a x1^", 4), ("a^2x1", 3)])
def test_syntax_errors(text, position):
	with pytest.raises(PcSyntaxError) as info:
		parse_word(text, NAMES, source="test")
	assert info.value.position == position
	assert str(info.value).startswith("test: ")

def test_format():
	assert format_word((1, 0, 2), NAMES) == "a b^2"
	assert format_word((0, 0, 0), NAMES) == "1"
	assert format_letters([(0, 1), (2, -1), (1, 0)], NAMES) == "a b^-1"
