# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

import os.path as osp
import sys

import pytest

tools_dir = osp.join(osp.dirname(osp.abspath(__file__)), '..', 'tools')
if tools_dir not in sys.path:
    sys.path.insert(0, tools_dir)

import _init_paths  # noqa: E402,F401
from groups import groups_up_to  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line(
        'markers', 'slow: acceptance-scale runs (deselect with -m "not slow")')


@pytest.fixture(scope='session')
def groups16():
    """The 24 Abelian groups of order 2..16."""
    return groups_up_to(16)


@pytest.fixture(scope='session')
def groups9():
    return groups_up_to(9)
