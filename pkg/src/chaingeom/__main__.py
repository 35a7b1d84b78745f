import sys

from chaingeom.cli import main

sys.exit(main())
