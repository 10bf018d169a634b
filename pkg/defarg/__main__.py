import sys

from defarg.cli import main

sys.exit(main())
