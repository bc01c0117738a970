import sys

from padicval.cli import main

sys.exit(main())
