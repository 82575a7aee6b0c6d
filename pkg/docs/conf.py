# -*- coding: utf-8 -*-
#
# polysombor documentation build configuration file.
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join('..', 'polysombor')))
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "polysombor.settings")

import django  # noqa: E402

django.setup()

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'polysombor'
copyright = u'2026, polysombor developers'
author = u'polysombor developers'

version = u''
release = u'0.1.0'

language = 'en'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

html_theme = 'default'

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

if not on_rtd:  # only import and set the theme if we're building docs locally
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'

htmlhelp_basename = 'polysombordoc'
