#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Resource limits and their environment overrides."""

from dataclasses import dataclass, replace
import os
from typing import Mapping, Optional

DEFAULT_MAX_CAYLEY = 4096
DEFAULT_MAX_BAR = 32
DEFAULT_MAX_COMPLEMENT = 512
DEFAULT_COLLECT_STEPS = 10 ** 7

ENV_MAX_CAYLEY = "PAIRMULT_MAX_CAYLEY"
ENV_MAX_BAR = "PAIRMULT_MAX_BAR"
ENV_MAX_COMPLEMENT = "PAIRMULT_MAX_COMPLEMENT"
ENV_COLLECT_STEPS = "PAIRMULT_COLLECT_STEPS"

@dataclass(frozen=True)
class Limits:
	"""
	Resource guards.

	None of these change results, they only decide when a computation
	is refused instead of attempted.
	"""
	max_cayley: int = DEFAULT_MAX_CAYLEY
	max_bar: int = DEFAULT_MAX_BAR
	max_complement: int = DEFAULT_MAX_COMPLEMENT
	collect_step_cap: int = DEFAULT_COLLECT_STEPS

	@classmethod
	def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> 'Limits':
		"""Read limits from the environment, falling back to defaults."""
		if environ is None:
			environ = os.environ

		return cls(
			max_cayley=_read_positive(environ, ENV_MAX_CAYLEY, DEFAULT_MAX_CAYLEY),
			max_bar=_read_positive(environ, ENV_MAX_BAR, DEFAULT_MAX_BAR),
			max_complement=_read_positive(environ, ENV_MAX_COMPLEMENT, DEFAULT_MAX_COMPLEMENT),
			collect_step_cap=_read_positive(environ, ENV_COLLECT_STEPS, DEFAULT_COLLECT_STEPS),
		)

	def copy(self, **kwargs) -> 'Limits':
		"""Return a copy with some limits replaced."""
		return replace(self, **kwargs)

def _read_positive(environ: Mapping[str, str], key: str, default: int) -> int:
	value = environ.get(key)
	if value is None or value.strip() == "":
		return default

	try:
		result = int(value)
	except ValueError:
		raise ValueError(f"{key} must be an integer, got {value!r}") from None

	if result <= 0:
		raise ValueError(f"{key} must be positive, got {result}")

	return result

def get_limits(limits: Optional[Limits] = None) -> Limits:
	"""Return the given limits, or the environment ones."""
	return limits if limits is not None else Limits.from_env()
