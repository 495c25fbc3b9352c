import sys

from aircost.cli import main

sys.exit(main())
