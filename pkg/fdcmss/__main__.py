"""Run the command line with ``python -m fdcmss``.
"""
import sys

from fdcmss.main import main

sys.exit(main())
