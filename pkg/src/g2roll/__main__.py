"""Allow ``python -m g2roll``."""
import sys

from .cli import main

sys.exit(main())
