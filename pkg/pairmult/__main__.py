#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""Entry point for python -m pairmult."""

from pairmult.cli.main import main

if __name__ == "__main__":
	raise SystemExit(main())
