"""Allow ``python -m apw`` as an alternative to the ``apw`` script."""

import sys

from .cli import main

sys.exit(main())
