import sys

from flatsep.cli import main

sys.exit(main())
