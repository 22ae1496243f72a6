#!/usr/bin/env python

from setuptools import find_packages, setup


setup(name='sepinv',
      version='1.0.0',
      description='Invariants and separating sets of small finite groups',
      packages=find_packages(),
      package_data={'sepinv': ['data/catalog/*.json', 'data/theorems/*.json']},
      python_requires='>=3.7',
      install_requires=["numpy>=1.15.4", 'schema>=0.6.8', 'sympy>=1.5'],
      tests_require=['pytest>=5.0', 'hypothesis>=4.0'],
      extras_require={'test': ['pytest>=5.0', 'hypothesis>=4.0']},
      entry_points={'console_scripts': ['sepinv=sepinv.cli:main']},
      keywords='invariant theory, finite groups, separating invariants, zero-sum',
      license='Apache License 2.0',
      )
