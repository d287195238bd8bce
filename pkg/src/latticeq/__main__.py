import sys

from latticeq.cli.main import main

sys.exit(main())
