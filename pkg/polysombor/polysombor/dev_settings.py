from .settings import *

import logging

DEBUG = True

LOGGING['loggers']['polysombor']['level'] = 'DEBUG'
logging.basicConfig(level='DEBUG')
