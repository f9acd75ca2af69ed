import sys

from detfactor.cli import main

sys.exit(main())
