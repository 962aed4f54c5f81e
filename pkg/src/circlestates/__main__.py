import sys

from circlestates.cli import main

sys.exit(main())
