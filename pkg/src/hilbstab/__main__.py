import sys

from hilbstab.cli import main

sys.exit(main())
