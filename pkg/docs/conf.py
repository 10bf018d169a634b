# Sphinx configuration for the defarg API reference.
#
# Build with ``sphinx-build -b html docs docs/_build`` from the repository
# root; the package is imported from the source tree.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

from defarg import __version__  # noqa: E402

project = 'defarg'
copyright = '2026, defarg developers'
author = 'defarg developers'
version = release = __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx.ext.intersphinx',
    'sphinx.ext.doctest',
]
exclude_patterns = ['_build']

# Docstrings are numpy style, apart from the solver interface
napoleon_numpy_docstring = True
napoleon_google_docstring = True
napoleon_use_rtype = False

autodoc_member_order = 'bysource'
autodoc_typehints = 'description'
autodoc_default_options = {
    'members': True,
    'show-inheritance': True,
}

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
}

doctest_global_setup = 'from defarg import *'

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Defense graphs and reasons for argument graphs',
    'fixed_sidebar': True,
}
html_sidebars = {
    '**': [
        'about.html',
        'searchfield.html',
        'navigation.html',
        'relations.html',
    ]
}
