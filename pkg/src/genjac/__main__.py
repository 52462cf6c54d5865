import sys

from genjac.cli import main

sys.exit(main())
