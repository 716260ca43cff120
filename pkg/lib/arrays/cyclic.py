# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""
Barnes lattices L(Z_m).

T_m is the (m-1) x (m-1) tridiagonal Toeplitz matrix with -2 on the
diagonal and 1 next to it; T_ext appends the row (1, 0, ..., 0, 1), which
makes its columns a basis of L(Z_m). U_m has ones on the diagonal and the
subdiagonal, and its last column is replaced by (0, ..., 0, -1, -1, -1, 0).
The columns of T_m U_m are minimal vectors forming a basis.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging

from arrays.admissible import AdmissibleArray
from core.exact_linalg import IntMatrix
from core.lattice import LatticeBasis
from groups import FiniteAbelianGroup
from utils.errors import VerificationError


def toeplitz_t(m):
    k = m - 1
    return IntMatrix([[-2 if i == j else (1 if abs(i - j) == 1 else 0)
                       for j in range(k)] for i in range(k)])


def toeplitz_t_ext(m):
    k = m - 1
    wrap = [0] * k
    wrap[0] += 1
    wrap[k - 1] += 1
    return IntMatrix(toeplitz_t(m).to_lists() + [wrap])


def bidiagonal_u(m):
    k = m - 1
    rows = [[1 if (j == i or j == i - 1) else 0 for j in range(k)]
            for i in range(k)]
    last = [0] * k
    for i in range(max(0, k - 4), k - 1):
        last[i] = -1
    for i in range(k):
        rows[i][k - 1] = last[i]
    return IntMatrix(rows)


def cyclic_minimal_array(m, verify=True):
    if m < 5:
        raise ValueError('the Toeplitz construction needs m >= 5, got {}'.format(m))
    G = FiniteAbelianGroup([m])
    M = toeplitz_t(m).matmul(bidiagonal_u(m))
    arr = AdmissibleArray(G, G.nonzero, M, name='M_{}'.format(m))
    if verify:
        arr.verify('basis', norm_sq_expected=4)
        det = arr.det_M()
        if det != (-1) ** (m - 1) * m:
            raise VerificationError('det M_{} = {}'.format(m, det))
    logging.debug('=> cyclic array M_{}'.format(m))
    return arr


def cyclic_basis(n):
    """B_{n+1,n}: the extended Toeplitz basis of L(Z_{n+1})."""
    if n < 2:
        raise ValueError('cyclic basis needs n >= 2, got {}'.format(n))
    G = FiniteAbelianGroup([n + 1])
    return LatticeBasis(G, toeplitz_t_ext(n + 1))
