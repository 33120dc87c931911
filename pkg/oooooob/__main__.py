import sys

from oooooob.cli import main

sys.exit(main())
