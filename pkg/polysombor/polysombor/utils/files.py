import os

from django.conf import settings
from django.core.management.base import CommandError

from polysombor.utils.parser import EdgeListError, read_edge_list


def load_graph(path):
    try:
        with open(path, encoding='utf-8') as f:
            return read_edge_list(f.read())
    except OSError as e:
        raise CommandError("Cannot read {}: {}".format(path, e), returncode=2)
    except EdgeListError as e:
        raise CommandError("{}: {}".format(path, e), returncode=2)


def write_text(path, text):
    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
    except OSError as e:
        raise CommandError("Cannot write {}: {}".format(path, e), returncode=2)


def default_report_path(campaign, *params):
    """<REPORT_ROOT>/<campaign>-<params>.jsonl"""
    name = "-".join([campaign] + [str(p) for p in params if p not in (None, "")])
    return os.path.join(settings.REPORT_ROOT, "{}.jsonl".format(name))
