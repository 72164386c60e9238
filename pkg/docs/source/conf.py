# -*- coding: utf-8 -*-
#
# twisted-torus documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath(os.path.join("..", "..", "python")))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinxcontrib.programoutput'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = u'twisted-torus'
copyright = u'2026, the twisted-torus developers'
author = u'the twisted-torus developers'

# The short X.Y version.
version = u'0.1.0'
# The full version, including alpha/beta/rc tags.
release = u'0.1.0'

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': True,
    'display_version': True,
}
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ['_static']
htmlhelp_basename = 'TwistedTorusdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}
latex_documents = [
    (master_doc, 'TwistedTorus.tex', u'twisted-torus Documentation',
     author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'ttk', u'twisted-torus Documentation',
     [author], 1)
]

intersphinx_mapping = {'https://docs.python.org/': None}
