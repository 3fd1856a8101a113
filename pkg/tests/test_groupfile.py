#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for group definition files."""

import json

import pytest

from pairmult.cli.groupfile import GroupFile
from pairmult.exceptions import GroupFileError, Inconsistent

D4_PC = {
	"name": "D4",
	"pc": {"generators": ["s", "r"], "orders": [2, 4], "commutators": {"r,s": "r^2"}},
	"subgroups": {"R": "r", "S": ["s"], "Z": "r^2"},
	"complements": {"R": "s"},
}

D4_PERM = {
	"name": "D4p",
	"perm": {"degree": 4, "generators": [[1, 2, 3, 0], [0, 3, 2, 1]], "names": ["r", "s"]},
	"subgroups": {"R": "r"},
	"complements": {"R": "s", "S": "s"},
}

def test_pc_file(limits):
	group_file = GroupFile.from_dict(D4_PC)
	G = group_file.group(limits=limits)
	assert G.name == "D4"
	assert G.order == 8
	assert group_file.presentation().order() == 8
	assert group_file.subgroup(G, "R").order == 4
	assert group_file.subgroup(G, "S").order == 2
	assert group_file.subgroup(G, "Z").order == 2

def test_default_complement(limits):
	group_file = GroupFile.from_dict(D4_PC)
	G = group_file.group(limits=limits)
	pair = group_file.pair(G, "R")
	assert pair.is_split()
	assert pair.k_sub.order == 2
	assert not group_file.pair(G, "Z").is_split()

def test_perm_file(limits):
	group_file = GroupFile.from_dict(D4_PERM)
	G = group_file.group(limits=limits)
	assert G.order == 8
	pair = group_file.pair(G, "R", "S")
	assert (pair.n_sub.order, pair.k_sub.order) == (4, 2)
	with pytest.raises(GroupFileError):
		group_file.presentation()

def test_text_round_trip():
	group_file = GroupFile.from_dict(D4_PC)
	again = GroupFile.from_text(group_file.to_text())
	assert again.to_dict() == group_file.to_dict()

def test_from_file(tmp_path):
	path = tmp_path / "d4.json"
	path.write_text(json.dumps(D4_PERM))
	group_file = GroupFile.from_file(path)
	assert group_file.source == str(path)
	assert group_file.name == "D4p"

@pytest.mark.parametrize("document", [
	{"name": "x"},
	{"name": "x", "pc": D4_PC["pc"], "perm": D4_PERM["perm"]},
	{"name": "x", "pc": D4_PC["pc"], "extra": 1},
	{"name": "x", "perm": {"degree": 4}},
	{"name": "x", "perm": {"degree": 0, "generators": []}},
	{"name": "x", "perm": {"degree": 4, "generators": [[1, 0, 2, 3]], "names": ["a", "b"]}},
	{"name": "x", "pc": D4_PC["pc"], "subgroups": {"N": ["r", 2]}},
	[1, 2],
])
def test_bad_documents(document):
	with pytest.raises(GroupFileError):
		GroupFile.from_dict(document)

def test_bad_json():
	with pytest.raises(GroupFileError, match="line 2"):
		GroupFile.from_text('{"name": "x",\n oops}', source="bad.json")

def test_unknown_labels(limits):
	group_file = GroupFile.from_dict(D4_PC)
	G = group_file.group(limits=limits)
	with pytest.raises(GroupFileError):
		group_file.subgroup(G, "Q")
	with pytest.raises(GroupFileError):
		group_file.pair(G, "R", "Q")

def test_inconsistent_pc(limits):
	document = {"name": "bad", "pc": {"generators": ["g1", "g2"], "orders": [2, 2], "commutators": {"g2,g1": "g2"}}}
	with pytest.raises(Inconsistent):
		GroupFile.from_dict(document).group(limits=limits)
