import sys

from modquanta.cli import main

sys.exit(main())
