#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Word-strings over named generators."""

import re
from typing import Dict, List, Optional, Sequence, Tuple

from pairmult.exceptions import PcSyntaxError

# word := term (" " term)*, term := name("^" int)?
TERM = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?[0-9]+))?")
IDENTITY = "1"

Letters = List[Tuple[int, int]]

def parse_word(text: str, names: Sequence[str], source: Optional[str] = None) -> Letters:
	"""
	Parse a word-string into (generator index, exponent) pairs.

	The empty string and "1" denote the identity. Exponents may be
	negative and are kept as written.
	"""
	index: Dict[str, int] = {name: i for i, name in enumerate(names)}
	letters: Letters = []

	if text.strip() in ("", IDENTITY):
		return letters

	position = 0
	length = len(text)
	while position < length:
		if text[position].isspace():
			position += 1
			continue

		match = TERM.match(text, position)
		if match is None:
			raise PcSyntaxError(f"unexpected character {text[position]!r}", position, source)

		name, exponent = match.group(1), match.group(2)
		if name not in index:
			raise PcSyntaxError(f"unknown generator {name!r}", position, source)

		end = match.end()
		if end < length and not text[end].isspace():
			raise PcSyntaxError(f"unexpected character {text[end]!r}", end, source)

		letters.append((index[name], int(exponent) if exponent is not None else 1))
		position = end

	return letters

def format_word(exponents: Sequence[int], names: Sequence[str]) -> str:
	"""Format an exponent vector as a word-string."""
	terms = []
	for name, exponent in zip(names, exponents):
		if exponent == 1:
			terms.append(name)
		elif exponent != 0:
			terms.append(f"{name}^{exponent}")
	return " ".join(terms) if terms else IDENTITY

def format_letters(letters: Letters, names: Sequence[str]) -> str:
	terms = [names[g] if e == 1 else f"{names[g]}^{e}" for g, e in letters if e != 0]
	return " ".join(terms) if terms else IDENTITY
