#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Tests for resource limits."""

import pytest

from pairmult.utils.config import (DEFAULT_MAX_BAR, DEFAULT_MAX_CAYLEY, ENV_MAX_BAR, ENV_MAX_CAYLEY, Limits,
                                   get_limits)

def test_defaults_without_environment():
	limits = Limits.from_env({})
	assert limits.max_cayley == DEFAULT_MAX_CAYLEY
	assert limits.max_bar == DEFAULT_MAX_BAR

def test_environment_overrides():
	limits = Limits.from_env({ENV_MAX_CAYLEY: "128", ENV_MAX_BAR: " 16 "})
	assert limits.max_cayley == 128
	assert limits.max_bar == 16

def test_blank_value_is_default():
	assert Limits.from_env({ENV_MAX_CAYLEY: ""}).max_cayley == DEFAULT_MAX_CAYLEY

@pytest.mark.parametrize("value", ["abc", "0", "-3", "1.5"])
def test_bad_values(value):
	with pytest.raises(ValueError, match=ENV_MAX_CAYLEY):
		Limits.from_env({ENV_MAX_CAYLEY: value})

def test_copy_replaces_one_limit():
	limits = Limits().copy(max_bar=8)
	assert limits.max_bar == 8
	assert limits.max_cayley == DEFAULT_MAX_CAYLEY

def test_get_limits_keeps_explicit():
	limits = Limits(max_cayley=10)
	assert get_limits(limits) is limits
