# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""
Hand-made arrays for the groups the Toeplitz and product constructions do
not reach. Rows are written as label -> {column: entry} with 1-based
columns, exactly as the arrays are tabulated.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from arrays.admissible import AdmissibleArray
from core.exact_linalg import IntMatrix
from groups import FiniteAbelianGroup
from utils.errors import HypothesisError


SMALL_ARRAYS = {
    (2,): [
        ((1,), {1: -2}),
    ],
    (3,): [
        ((1,), {1: -2, 2: 1}),
        ((2,), {1: 1, 2: -2}),
    ],
    (2, 2): [
        ((0, 1), {1: 1, 2: -1, 3: 1}),
        ((1, 0), {1: 1, 2: 1, 3: -1}),
        ((1, 1), {1: -1, 2: 1, 3: 1}),
    ],
}

SPECIAL_ARRAYS = {
    (2, 4): [
        ((1, 0), {1: 1, 5: 1, 7: -1}),
        ((1, 3), {1: 1, 2: 1, 5: -1}),
        ((0, 3), {1: -1, 2: 1, 3: 1, 4: -1, 6: -1}),
        ((1, 2), {2: -1, 3: 1, 4: 1, 5: -1, 7: -1}),
        ((1, 1), {3: -1, 4: 1, 5: 1}),
        ((0, 1), {6: 1}),
        ((0, 2), {6: 1, 7: 1}),
    ],
    (3, 3): [
        ((0, 1), {1: 1, 5: -1, 7: -1}),
        ((0, 2), {2: 1, 3: 1, 6: -1}),
        ((1, 0), {1: 1, 4: 1, 5: 1, 6: 1}),
        ((1, 1), {1: -1, 4: 1}),
        ((1, 2), {7: 1, 8: -1}),
        ((2, 0), {2: 1, 3: -1, 8: 1}),
        ((2, 1), {3: 1, 4: -1, 5: 1}),
        ((2, 2), {2: -1, 6: 1, 7: 1, 8: 1}),
    ],
    (4, 4): [
        ((0, 1), {1: 1, 2: 1, 3: 1, 4: 1}),
        ((0, 2), {5: 1}),
        ((0, 3), {6: 1, 7: 1, 8: 1}),
        ((1, 0), {2: -1, 5: 1, 6: -1}),
        ((1, 1), {6: 1}),
        ((1, 2), {1: 1, 5: -1, 12: -1, 14: -1}),
        ((1, 3), {1: -1, 2: 1, 9: 1, 10: 1, 11: 1, 13: -1}),
        ((2, 0), {4: -1, 12: 1, 13: 1}),
        ((2, 1), {9: 1, 14: 1}),
        ((2, 2), {3: 1, 10: 1}),
        ((2, 3), {3: -1, 4: 1, 11: 1, 15: -1}),
        ((3, 0), {7: -1, 9: -1}),
        ((3, 1), {7: 1, 8: -1, 10: -1, 14: 1, 15: 1}),
        ((3, 2), {8: 1, 11: -1, 12: 1, 15: 1}),
        ((3, 3), {13: 1}),
    ],
}

# nonsingular (det -45) but not a basis: shows well-roundedness only
WELL_ROUNDED_ARRAYS = {
    (3, 3): [
        ((0, 1), {1: 1, 7: -1, 8: 1}),
        ((1, 0), {1: 1, 2: 1, 8: -1}),
        ((1, 1), {1: -1, 2: 1, 3: 1}),
        ((2, 1), {2: -1, 3: 1, 4: 1}),
        ((0, 2), {3: -1, 4: 1, 5: 1}),
        ((2, 0), {4: -1, 5: 1, 6: 1}),
        ((2, 2), {5: -1, 6: 1, 7: 1}),
        ((1, 2), {6: -1, 7: 1, 8: 1}),
    ],
}


def _from_table(G, table, name):
    labels = [label for label, _ in table]
    M = IntMatrix([[entries.get(j, 0) for j in range(1, G.n + 1)]
                   for _, entries in table])
    return AdmissibleArray(G, labels, M, name=name)


def _lookup(G, tables, what):
    table = tables.get(G.moduli)
    if table is None:
        raise HypothesisError('no {} array for {} (available: {})'.format(
            what, G.spec, ', '.join(
                FiniteAbelianGroup(k).spec for k in sorted(tables))))
    return table


def small_group_array(G, verify=True):
    arr = _from_table(G, _lookup(G, SMALL_ARRAYS, 'small-group'), G.spec)
    if verify:
        arr.verify('basis')
    return arr


def special_array(G, verify=True):
    arr = _from_table(G, _lookup(G, SPECIAL_ARRAYS, 'special'), G.spec)
    if verify:
        arr.verify('basis', norm_sq_expected=4)
    return arr


def wellrounded_array(G, verify=True):
    arr = _from_table(G, _lookup(G, WELL_ROUNDED_ARRAYS, 'well-rounded'),
                      G.spec)
    if verify:
        arr.verify('well_rounded', norm_sq_expected=4)
    return arr
