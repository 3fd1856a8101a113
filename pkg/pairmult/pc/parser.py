#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""pc presentation documents."""

import json
from typing import Dict, Mapping, Optional, Tuple

from pairmult.exceptions import PcSyntaxError
from pairmult.pc.presentation import PcPresentation
from pairmult.pc.words import Letters, parse_word
from pairmult.utils.config import Limits

def parse_pc_file(text: str, source: Optional[str] = None, limits: Optional[Limits] = None) -> PcPresentation:
	"""
	Parse a presentation from JSON text.

	The text is either a group file with a "pc" member or the bare "pc"
	object itself.
	"""
	try:
		document = json.loads(text)
	except json.JSONDecodeError as e:
		raise PcSyntaxError(e.msg, e.pos, source) from None

	if not isinstance(document, dict):
		raise PcSyntaxError("document must be a JSON object", 0, source)
	if "pc" in document:
		document = document["pc"]

	return presentation_from_dict(document, source=source, limits=limits)

def presentation_from_dict(document: Mapping, source: Optional[str] = None,
                           limits: Optional[Limits] = None) -> PcPresentation:
	"""Build a presentation from its decoded "pc" object."""
	if not isinstance(document, Mapping):
		raise PcSyntaxError("pc member must be an object", None, source)

	names = document.get("generators")
	orders = document.get("orders")
	if not isinstance(names, list) or not all(isinstance(name, str) for name in names):
		raise PcSyntaxError("generators must be a list of names", None, source)
	if not isinstance(orders, list) or not all(isinstance(o, int) and not isinstance(o, bool) for o in orders):
		raise PcSyntaxError("orders must be a list of integers", None, source)

	powers: Dict[int, Letters] = {}
	for name, text in _object(document, "powers", source).items():
		if name not in names:
			raise PcSyntaxError(f"power relation for unknown generator {name!r}", None, source)
		powers[names.index(name)] = _word(text, names, f"powers.{name}", source)

	commutators: Dict[Tuple[int, int], Letters] = {}
	for key, text in _object(document, "commutators", source).items():
		parts = [part.strip() for part in key.split(",")]
		if len(parts) != 2 or not all(part in names for part in parts):
			raise PcSyntaxError(f"commutator key {key!r} must be two generator names \"u,v\"", None, source)
		u, v = names.index(parts[0]), names.index(parts[1])
		commutators[(u, v)] = _word(text, names, f"commutators.{key}", source)

	return PcPresentation.from_words(names, orders, powers, commutators, limits=limits)

def _object(document: Mapping, key: str, source: Optional[str]) -> Mapping:
	value = document.get(key, {})
	if not isinstance(value, Mapping):
		raise PcSyntaxError(f"{key} must be an object", None, source)
	return value

def _word(text, names, where: str, source: Optional[str]) -> Letters:
	if not isinstance(text, str):
		raise PcSyntaxError(f"{where} must be a word-string", None, source)
	location = f"{source}: {where}" if source else where
	return parse_word(text, names, location)
