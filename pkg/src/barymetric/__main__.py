import sys

from barymetric.cli import main

sys.exit(main())
