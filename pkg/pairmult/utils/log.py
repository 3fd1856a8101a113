#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Logging setup for the command line."""

import logging

LOG_FORMAT = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"

def setup_logging(verbosity: int = 0) -> None:
	"""
	Configure the root logger.

	0 = warnings only, 1 = info, 2 or more = debug.
	Library modules only ever call logging.getLogger(__name__).
	"""
	if verbosity >= 2:
		level = logging.DEBUG
	elif verbosity == 1:
		level = logging.INFO
	else:
		level = logging.WARNING

	logging.basicConfig(level=level, format=LOG_FORMAT)
