# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""Makes the packages under lib/ importable from tools/ and tests/."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import os.path as osp
import sys

ROOT_DIR = osp.abspath(osp.join(osp.dirname(__file__), '..'))
LIB_DIR = osp.join(ROOT_DIR, 'lib')


def add_path(path):
    if path not in sys.path:
        sys.path.insert(0, path)


add_path(LIB_DIR)
