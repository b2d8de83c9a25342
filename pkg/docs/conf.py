# -*- coding: utf-8 -*-
#
# django-petri-persistence documentation build configuration file.
import datetime

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx', 'sphinx.ext.autosectionlabel']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'django-petri-persistence'
copyright = '%d, django-petri-persistence contributors' % datetime.date.today().year

try:
    from version import get_git_version
    release = get_git_version()
    version = '.'.join(release.split('.')[:2])
except (ImportError, ValueError):
    version = release = 'dev'

exclude_trees = ['_build']
pygments_style = 'sphinx'

intersphinx_mapping = {
    'django': (
        'https://docs.djangoproject.com/en/3.2/',
        'https://docs.djangoproject.com/en/3.2/_objects/'),
    'python': ('https://docs.python.org/3', None),
}

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'petripersistencedoc'

latex_documents = [
    ('index', 'petripersistence.tex', 'django-petri-persistence Documentation',
     'django-petri-persistence contributors', 'manual'),
]
