# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from .admissible import AdmissibleArray
from .admissible import BuildTrace
from .cyclic import cyclic_minimal_array
from .cyclic import cyclic_basis
from .printed import small_group_array
from .printed import special_array
from .printed import wellrounded_array
from .products import combine_product
from .products import attach_small
from .fallback import fallback_greedy_basis
from .builder import plan_blocks
from .builder import build_minimal_basis
