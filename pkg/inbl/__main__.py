"""Allow running the package with python -m inbl."""

import sys

from .cli import main


sys.exit(main())
