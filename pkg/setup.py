#!/usr/bin/env python

from os.path import exists

from setuptools import setup

from version import get_git_version

setup(
    name='django-petri-persistence',
    version=get_git_version(),
    packages=[
        'petri_persistence',
        'petri_persistence.management',
        'petri_persistence.management.commands',
        'petri_persistence.migrations',
        'petri_persistence.tests',
    ],
    scripts=[],
    license='MIT',
    description='Persistence analysis (e/e, l/l, e/l and e/l-k) of Petri nets as a Django app.',
    long_description=open('README.rst').read() if exists('README.rst') else '',
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Framework :: Django',
        'Framework :: Django :: 3.2',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries',
    ],
    install_requires=[
        'Django>=3.2',
        'sympy',
    ],
    python_requires='>=3.8',
    entry_points={
        'console_scripts': ['petri-persistence = petri_persistence.cli:main'],
    },
    zip_safe=False,
)
