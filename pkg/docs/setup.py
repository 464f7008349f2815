#!/usr/bin/env python3

"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers
"""

import pydoc
import sys
import os

MODULES = ['weightcruncher.field', 'weightcruncher.subspace', 'weightcruncher.cdc',
           'weightcruncher.fdtw', 'weightcruncher.codec', 'weightcruncher.bounds',
           'weightcruncher.verify', 'weightcruncher.errors']

def write_doc(module):
    pydoc.writedoc(module)

    doc_file = './' + module + '.html'
    with open(doc_file, 'rt') as f:
        data = f.read()
        data = data.replace('#ee77aa', '#5577aa')
        data = data.replace('#ffc8d8', '#66c8d8')
        data = data.replace('#eeaa77', '#55aa77')

    with open(doc_file, 'wt') as f:
        f.write(data)

    return doc_file

def main():
    path = os.path.abspath(sys.argv[0])
    d = os.path.dirname(path)
    os.chdir(d)

    modules = sys.argv[1:2] or MODULES
    for module in modules:
        print('writing {0}'.format(write_doc(module)))


if __name__ == '__main__':
    main()
