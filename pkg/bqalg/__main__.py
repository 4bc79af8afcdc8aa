import sys

from bqalg.cli import main

sys.exit(main())
