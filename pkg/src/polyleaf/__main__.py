import sys

from polyleaf.cli.main import main

sys.exit(main())
