#!/usr/bin/env python3

"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers
"""

from setuptools import setup, find_packages, Extension
from Cython.Build import cythonize

import numpy as np

include_dirs = [np.get_include()]

def extension(name, sources):
    return Extension(name, sources=sources,
                           include_dirs=include_dirs,
                           )

def main():
    cythonize('src/cwkernels.pyx', language_level = 3)
    module_kernels = extension(name='weightcruncher.cwkernels',
                               sources=['src/cwkernels.c'])

    setup(name='weightcruncher',
          version='0.1.0',
          description='Constant weight codes from constant dimension codes.',
          license='LGPL-2.1',
          packages=find_packages(exclude=['tests', 'tests.*']),
          package_data={'weightcruncher': ['*.so']},
          ext_modules=[module_kernels],
          install_requires=['numpy', 'tqdm'],
          entry_points={
              'console_scripts': ['weightcruncher = weightcruncher.cli:main'],
              },
          classifiers=[
              'Development Status :: 3 - Alpha',
              'Programming Language :: Python :: 3',
              'Topic :: Scientific/Engineering :: Mathematics',
              ]
          )


if __name__ == '__main__':
    main()
