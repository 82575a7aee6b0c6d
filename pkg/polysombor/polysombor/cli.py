import os
import sys


def cli_main(argv=None):
    """Run a management command from ``argv`` and return its exit status."""
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "polysombor.settings")

    from django.core.management import execute_from_command_line

    try:
        execute_from_command_line(list(argv if argv is not None else sys.argv))
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    return 0
