import sys

from hbknot.cli import main

sys.exit(main())
