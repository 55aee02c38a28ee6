# -*- coding: utf-8 -*-
#
# splitcycle documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.autosummary',
              'sphinx.ext.doctest',
              'sphinx.ext.viewcode']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'splitcycle'
copyright = u'2026, the splitcycle developers'

# The short X.Y version.
version = '1.0'
# The full version, including alpha/beta/rc tags.
release = '1.0'

exclude_patterns = ['_build']

pygments_style = 'sphinx'


# -- Options for HTML output ---------------------------------------------------

html_theme = 'sphinxdoc'

html_static_path = []

htmlhelp_basename = 'splitcycledoc'


# -- Options for manual page output --------------------------------------------

man_pages = [
    ('cli', 'splitcycle', u'Split Cycle and friends on ranked ballots',
     [u'the splitcycle developers'], 1)
]
