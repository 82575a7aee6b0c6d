import os
from .settings import *

REPORT_ROOT = os.getenv("SOMBOR_REPORT_ROOT") or REPORT_ROOT
SOMBOR_DEFAULT_GRID = os.getenv("SOMBOR_DEFAULT_GRID") or SOMBOR_DEFAULT_GRID
SOMBOR_COMPARISON_MARGIN = float(os.getenv("SOMBOR_COMPARISON_MARGIN") or SOMBOR_COMPARISON_MARGIN)

LOGGING['loggers']['polysombor']['level'] = os.getenv("SOMBOR_LOG_LEVEL") or "WARNING"
