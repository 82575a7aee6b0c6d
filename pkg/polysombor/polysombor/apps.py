import os
from django.apps import AppConfig
from django.conf import settings


class PolySomborConfig(AppConfig):
    name = 'polysombor'

    def ready(self):
        try:
            os.makedirs(settings.REPORT_ROOT)
        except os.error:
            pass
