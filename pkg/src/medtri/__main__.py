import sys

from medtri.cli import main

sys.exit(main())
