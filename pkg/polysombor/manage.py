#!/usr/bin/env python
import os
import sys


if __name__ == "__main__":
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "polysombor.settings")

    from polysombor.cli import cli_main

    sys.exit(cli_main(sys.argv))
