"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers
"""

import sys

from .cli import main

sys.exit(main())
