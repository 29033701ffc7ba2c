import sys

from .cli.Commands import main

sys.exit(main())
