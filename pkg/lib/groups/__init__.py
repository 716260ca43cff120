# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from .abelian import FiniteAbelianGroup
from .abelian import parse_group
from .abelian import enumerate_elements
from .abelian import element_ops
from .abelian import abelian_groups
from .abelian import groups_up_to
