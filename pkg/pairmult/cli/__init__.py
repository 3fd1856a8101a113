#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Command-line surface and file formats."""
