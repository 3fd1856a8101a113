#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Group definition files."""

import json
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Union

from pairmult.exceptions import GroupFileError
from pairmult.groups.finitegroup import FiniteGroup
from pairmult.groups.library import permutation_group, subgroup_from_text
from pairmult.groups.pair import Pair
from pairmult.groups.subgroup import Subgroup
from pairmult.pc.parser import presentation_from_dict
from pairmult.pc.pcgroup import pc_to_group
from pairmult.pc.presentation import PcPresentation
from pairmult.utils.config import Limits

Words = Union[str, List[str]]

def _words(value: Words, where: str) -> str:
	"""Accept a word-string or a list of generator names."""
	if isinstance(value, str):
		return value
	if isinstance(value, list) and all(isinstance(name, str) for name in value):
		return " ".join(value)
	raise GroupFileError(f"{where} must be a word-string or a list of generator names")

class GroupFile:
	"""
	Class representing a group definition file.

	The group is given by exactly one of a pc presentation ("pc") or
	permutation generators ("perm"). Named subgroups and complements are
	word-strings (or lists of generator names) evaluated in the group.
	"""
	def __init__(self,
	             name: str,
	             pc: Optional[Dict] = None,
	             perm: Optional[Dict] = None,
	             subgroups: Optional[Dict[str, Words]] = None,
	             complements: Optional[Dict[str, Words]] = None,
	             source: Optional[str] = None,
	            ):
		"""Initialize a group file, checking its shape."""
		if (pc is None) == (perm is None):
			raise GroupFileError(f"{source or name}: exactly one of \"pc\" and \"perm\" is required")

		self.name = name
		self.pc = pc
		self.perm = perm
		self.subgroups = dict(subgroups or {})
		self.complements = dict(complements or {})
		self.source = source

		for label, value in list(self.subgroups.items()) + list(self.complements.items()):
			_words(value, f"subgroup {label!r}")

		if self.perm is not None:
			self._check_perm()

	def __str__(self) -> str:
		"""Return a string representation of the group file."""
		kind = "pc" if self.pc is not None else "perm"
		return f"GroupFile(name={self.name}, {kind}, subgroups={sorted(self.subgroups)})"

	def _check_perm(self):
		perm = self.perm
		if not isinstance(perm, Mapping) or "degree" not in perm or "generators" not in perm:
			raise GroupFileError(f"{self.source or self.name}: perm needs \"degree\" and \"generators\"")
		if not isinstance(perm["degree"], int) or perm["degree"] < 1:
			raise GroupFileError(f"{self.source or self.name}: perm degree must be a positive integer")
		names = perm.get("names")
		if names is not None and len(names) != len(perm["generators"]):
			raise GroupFileError(f"{self.source or self.name}: one name per permutation generator is required")

	@classmethod
	def from_dict(cls, document: Mapping, source: Optional[str] = None) -> 'GroupFile':
		if not isinstance(document, Mapping):
			raise GroupFileError(f"{source or 'group file'}: document must be a JSON object")
		unknown = set(document) - {"name", "pc", "perm", "subgroups", "complements"}
		if unknown:
			raise GroupFileError(f"{source or 'group file'}: unknown members {', '.join(sorted(unknown))}")

		return cls(
			name=document.get("name", "G"),
			pc=document.get("pc"),
			perm=document.get("perm"),
			subgroups=document.get("subgroups"),
			complements=document.get("complements"),
			source=source,
		)

	@classmethod
	def from_text(cls, text: str, source: Optional[str] = None) -> 'GroupFile':
		try:
			document = json.loads(text)
		except json.JSONDecodeError as e:
			raise GroupFileError(f"{source or 'group file'}: line {e.lineno} column {e.colno}: {e.msg}") from None
		return cls.from_dict(document, source=source)

	@classmethod
	def from_file(cls, path: Union[str, Path]) -> 'GroupFile':
		path = Path(path)
		return cls.from_text(path.read_text(), source=str(path))

	def to_dict(self) -> dict:
		document = {"name": self.name}
		if self.pc is not None:
			document["pc"] = self.pc
		else:
			document["perm"] = self.perm
		if self.subgroups:
			document["subgroups"] = dict(self.subgroups)
		if self.complements:
			document["complements"] = dict(self.complements)
		return document

	def to_text(self) -> str:
		return json.dumps(self.to_dict(), indent=2) + "\n"

	def presentation(self, limits: Optional[Limits] = None) -> PcPresentation:
		if self.pc is None:
			raise GroupFileError(f"{self.source or self.name}: no pc presentation")
		return presentation_from_dict(self.pc, source=self.source, limits=limits)

	def group(self, limits: Optional[Limits] = None) -> FiniteGroup:
		"""Build the group, checking consistency of a pc presentation."""
		if self.pc is not None:
			return pc_to_group(self.presentation(limits=limits), name=self.name, limits=limits)
		return permutation_group(self.perm["degree"], self.perm["generators"], names=self.perm.get("names"),
		                         name=self.name, limits=limits)

	def subgroup(self, group: FiniteGroup, label: str) -> Subgroup:
		if label not in self.subgroups:
			raise GroupFileError(f"{self.source or self.name}: no subgroup named {label!r}")
		return subgroup_from_text(group, _words(self.subgroups[label], label), source=self.source)

	def pair(self, group: FiniteGroup, n_label: str, k_label: Optional[str] = None) -> Pair:
		"""
		Return the pair (G,N) for the subgroup named n_label.

		The complement is complements[k_label], or complements[n_label]
		when k_label is not given and that entry exists.
		"""
		n_sub = self.subgroup(group, n_label)

		if k_label is None and n_label in self.complements:
			k_label = n_label
		k_sub = None
		if k_label is not None:
			if k_label not in self.complements:
				raise GroupFileError(f"{self.source or self.name}: no complement named {k_label!r}")
			k_sub = subgroup_from_text(group, _words(self.complements[k_label], k_label), source=self.source)

		return Pair(group, n_sub, k_sub)
