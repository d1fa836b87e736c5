"""Run the command line with ``python -m rabilimit``.

:created: 2026-10-17
"""

import sys

from rabilimit.cli import main

sys.exit(main())
