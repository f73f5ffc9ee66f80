"""Allow ``python -m cauchy_projection``."""

import sys

from .cli.main import main

sys.exit(main())
