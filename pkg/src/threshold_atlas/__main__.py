import sys

from threshold_atlas.cli import main

sys.exit(main())
