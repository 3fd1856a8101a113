import os
import sys
sys.path.insert(0, os.path.abspath('./../..'))

# -- Project information -----------------------------------------------------

import pairmult

project = 'pairmult'
copyright = '2026, pairmult contributors'
author = 'pairmult contributors'
release = pairmult.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.napoleon',
]

autosummary_generate = True

add_function_parentheses = True

autodoc_default_options = {
    'members': True,
    'undoc-members': True,
}


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

# -- Setup function ----------------------------------------------------------

import types

def setup(app):
    app.connect('autodoc-skip-member', documented_dunder_callback)
    app.outdir = "_build/html"

def documented_dunder_callback(app, what, name, obj, skip, options):
    """Keep dunder methods that carry their own docstring, such as __init__."""
    if not name.startswith('__'):
        return skip
    if getattr(obj, '__doc__', None) and isinstance(obj, (types.FunctionType, types.MethodType)):
        return False
    return skip
