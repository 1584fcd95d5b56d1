# Configuration file for the Sphinx documentation builder.
import os
import sys

root = os.path.abspath('../../')
sys.path.insert(0, root)

# -- Project information -----------------------------------------------------

project = 'SymCayley'
copyright = '2026, SymCayley developers'
author = 'SymCayley developers'

init = os.path.join(root, 'symcayley', '__init__.py')
with open(init, encoding='utf-8') as f:
    version = next(line for line in f if line.startswith('__version__ =')).split(' = ')[-1].strip().strip('"')
release = version

# -- General configuration ---------------------------------------------------

master_doc = 'contents'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
templates_path = ['_templates']

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.autosectionlabel',
    'sphinx.ext.viewcode',
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
}

autosectionlabel_prefix_document = True
autodoc_member_order = 'bysource'
autodoc_typehints = 'description'
autodoc_typehints_description_target = 'documented_params'
python_use_unqualified_type_names = True

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': False,
    'prev_next_buttons_location': 'both',
}
