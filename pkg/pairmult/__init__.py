#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Schur multipliers of pairs of finite p-groups."""

__version__ = "1.0.0"
