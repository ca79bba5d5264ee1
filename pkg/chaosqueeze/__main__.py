import sys

from chaosqueeze.cli.main import main

sys.exit(main())
