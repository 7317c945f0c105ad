import sys

from boxpoly.harness.cli import main

sys.exit(main())
