# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""
Exact integer and rational linear algebra.

Nothing here touches floating point: determinants are fraction-free
(Bareiss), ranks use fraction-free elimination with row gcd
normalisation, and the rational helpers work over ``fractions.Fraction``.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
from collections import namedtuple
from fractions import Fraction
from functools import reduce
from math import gcd

import numpy as np

from utils.errors import CapExceededError
from utils.errors import MatrixFormatError


CauchyBinet = namedtuple('CauchyBinet', ['lhs', 'rhs', 'equal'])


class IntMatrix(object):
    """Immutable arbitrary-precision integer matrix, row-major."""

    __slots__ = ('rows', 'cols', '_data')

    def __init__(self, data):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if not data or not data[0]:
            raise ValueError('matrix needs at least one row and one column')
        width = len(data[0])
        for row in data:
            if len(row) != width:
                raise ValueError('ragged rows: {} vs {}'.format(len(row), width))
        self.rows = len(data)
        self.cols = width
        self._data = data

    @classmethod
    def from_columns(cls, columns):
        columns = [tuple(c) for c in columns]
        if not columns:
            raise ValueError('matrix needs at least one column')
        return cls(zip(*columns))

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(row[j] for row in self._data)

    def columns(self):
        return [tuple(c) for c in zip(*self._data)]

    def to_lists(self):
        return [list(row) for row in self._data]

    def transpose(self):
        return IntMatrix(zip(*self._data))

    @property
    def T(self):
        return self.transpose()

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError('shape mismatch {} @ {}'.format(
                self.shape, other.shape))
        other_cols = other.columns()
        return IntMatrix([[sum(a * b for a, b in zip(row, col))
                           for col in other_cols] for row in self._data])

    __matmul__ = matmul

    def select_columns(self, indices):
        return IntMatrix.from_columns([self.column(j) for j in indices])

    def submatrix_columns(self, k):
        """First k columns."""
        if not 1 <= k <= self.cols:
            raise ValueError('k={} out of range 1..{}'.format(k, self.cols))
        return self.select_columns(range(k))

    def select_rows(self, indices):
        return IntMatrix([self._data[i] for i in indices])

    def delete_row(self, i):
        return IntMatrix([r for t, r in enumerate(self._data) if t != i])

    def to_numpy(self, dtype=float):
        return np.array(self._data, dtype=dtype)

    def to_text(self):
        lines = ['{} {}'.format(self.rows, self.cols)]
        lines.extend(' '.join(str(x) for x in row) for row in self._data)
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self._data == other._data
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        return 'IntMatrix({})'.format([list(r) for r in self._data])


def parse_matrix_text(text):
    """Read the ``rows cols`` text format. Lines starting with '#' are skipped."""
    lines = [l.strip() for l in text.splitlines()]
    lines = [l for l in lines if l and not l.startswith('#')]
    if not lines:
        raise MatrixFormatError('empty matrix text')
    try:
        head = [int(t) for t in lines[0].split()]
    except ValueError:
        raise MatrixFormatError('bad header line {!r}'.format(lines[0]))
    if len(head) != 2 or head[0] < 1 or head[1] < 1:
        raise MatrixFormatError('header must be "rows cols", got {!r}'.format(
            lines[0]))
    rows, cols = head
    body = lines[1:]
    if len(body) != rows:
        raise MatrixFormatError('expected {} rows, found {}'.format(
            rows, len(body)))
    data = []
    for line in body:
        try:
            row = [int(t) for t in line.split()]
        except ValueError:
            raise MatrixFormatError('non-integer entry in {!r}'.format(line))
        if len(row) != cols:
            raise MatrixFormatError('expected {} entries in {!r}'.format(
                cols, line))
        data.append(row)
    return IntMatrix(data)


def _as_int_matrix(A):
    return A if isinstance(A, IntMatrix) else IntMatrix(A)


def bareiss_det(A):
    A = _as_int_matrix(A)
    if A.rows != A.cols:
        raise ValueError('determinant of a non-square {}x{} matrix'.format(
            A.rows, A.cols))
    n = A.rows
    m = A.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            for j in range(k + 1, n):
                # exact division
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def gram(A):
    """AᵀA."""
    A = _as_int_matrix(A)
    cols = A.columns()
    k = len(cols)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            v = sum(a * b for a, b in zip(cols[i], cols[j]))
            out[i][j] = v
            out[j][i] = v
    return IntMatrix(out)


def _normalise(row):
    g = reduce(gcd, row, 0)
    if g > 1:
        return [x // g for x in row]
    return row


def integer_rank(A):
    A = _as_int_matrix(A)
    m = A.to_lists()
    rank = 0
    for c in range(A.cols):
        pivot = next((i for i in range(rank, A.rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for i in range(rank + 1, A.rows):
            f = m[i][c]
            if f:
                m[i] = _normalise([p * x - f * y for x, y in zip(m[i], m[rank])])
        rank += 1
        if rank == A.rows:
            break
    return rank


def xgcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf(A):
    """
    Column-style Hermite normal form.

    The result is lower echelon: each nonzero column has a positive pivot
    below the pivots of the columns before it, entries to the left of a
    pivot are reduced into [0, pivot), zero columns come last.
    """
    A = _as_int_matrix(A)
    cols = [list(c) for c in A.columns()]
    rows = A.rows
    c = 0
    for r in range(rows):
        if c >= len(cols):
            break
        for j in range(c + 1, len(cols)):
            y = cols[j][r]
            if y == 0:
                continue
            x = cols[c][r]
            g, s, t = xgcd(x, y)
            a, b = x // g, y // g
            col_c, col_j = cols[c], cols[j]
            cols[c] = [s * u + t * v for u, v in zip(col_c, col_j)]
            cols[j] = [a * v - b * u for u, v in zip(col_c, col_j)]
        pivot = cols[c][r]
        if pivot == 0:
            continue
        if pivot < 0:
            cols[c] = [-u for u in cols[c]]
            pivot = -pivot
        for j in range(c):
            q = cols[j][r] // pivot
            if q:
                cols[j] = [u - q * v for u, v in zip(cols[j], cols[c])]
        c += 1
    return IntMatrix.from_columns(cols)


def _pivots(H):
    pivots = []
    for j, col in enumerate(H.columns()):
        r = next((i for i, x in enumerate(col) if x != 0), None)
        if r is None:
            break
        pivots.append((r, j))
    return pivots


def hnf_contains(H, v):
    """True if v lies in the integer column span of the HNF matrix H."""
    v = list(v)
    if len(v) != H.rows:
        raise ValueError('vector length {} != {}'.format(len(v), H.rows))
    pivot_of_row = dict(_pivots(H))
    for r in range(H.rows):
        if r in pivot_of_row:
            col = H.column(pivot_of_row[r])
            q, rem = divmod(v[r], col[r])
            if rem:
                return False
            if q:
                v = [a - q * b for a, b in zip(v, col)]
        elif v[r] != 0:
            return False
    return True


def same_lattice(A, B):
    A = _as_int_matrix(A)
    B = _as_int_matrix(B)
    HA, HB = hnf(A), hnf(B)
    return all(hnf_contains(HB, col) for col in A.columns()) and \
        all(hnf_contains(HA, col) for col in B.columns())


def cauchy_binet_check(A, max_rows=16):
    """det(AᵀA) against the sum of squared maximal minors."""
    A = _as_int_matrix(A)
    if A.rows < A.cols:
        raise ValueError('need rows >= cols, got {}x{}'.format(A.rows, A.cols))
    if A.rows > max_rows:
        raise CapExceededError(
            'Cauchy-Binet oracle is capped at {} rows, got {}'.format(
                max_rows, A.rows))
    lhs = bareiss_det(gram(A))
    rhs = 0
    for subset in itertools.combinations(range(A.rows), A.cols):
        rhs += bareiss_det(A.select_rows(subset)) ** 2
    return CauchyBinet(lhs=lhs, rhs=rhs, equal=lhs == rhs)


def ldl_decompose(G):
    """
    Exact LDLᵀ of a symmetric positive definite matrix.

    Returns (L, D) with L unit lower triangular (lists of Fractions) and D
    the diagonal.
    """
    rows = G.to_lists() if isinstance(G, IntMatrix) else [list(r) for r in G]
    n = len(rows)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        d = Fraction(rows[j][j]) - sum(
            (L[j][k] * L[j][k] * D[k] for k in range(j)), Fraction(0))
        if d <= 0:
            raise ValueError('matrix is not positive definite (pivot {})'.format(j))
        D[j] = d
        for i in range(j + 1, n):
            s = Fraction(rows[i][j]) - sum(
                (L[i][k] * L[j][k] * D[k] for k in range(j)), Fraction(0))
            L[i][j] = s / d
    return L, D


def rational_inverse(A):
    """Gauss-Jordan inverse over the rationals."""
    if isinstance(A, IntMatrix):
        rows = [[Fraction(x) for x in r] for r in A.to_lists()]
    else:
        rows = [[Fraction(x) for x in r] for r in A]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError('inverse of a non-square matrix')
    aug = [r + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(rows)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise ValueError('matrix is singular')
        aug[c], aug[pivot] = aug[pivot], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [r[n:] for r in aug]


def adjugate(A):
    """Integer adjugate, adj(A) = det(A) * A⁻¹."""
    A = _as_int_matrix(A)
    det = bareiss_det(A)
    if det == 0:
        raise ValueError('adjugate via inverse needs a nonsingular matrix')
    inv = rational_inverse(A)
    out = []
    for row in inv:
        vals = [x * det for x in row]
        assert all(v.denominator == 1 for v in vals)
        out.append([v.numerator for v in vals])
    return IntMatrix(out), det


class EchelonBasis(object):
    """Incremental exact independence test over the rationals."""

    def __init__(self, dim):
        self.dim = dim
        self._rows = []

    @property
    def rank(self):
        return len(self._rows)

    def _reduce(self, v):
        v = list(v)
        for p, w in self._rows:
            if v[p]:
                v = _normalise([w[p] * a - v[p] * b for a, b in zip(v, w)])
        return v

    def is_independent(self, v):
        return any(self._reduce(v))

    def add(self, v):
        """Insert v; returns False (and stores nothing) if v is dependent."""
        if len(v) != self.dim:
            raise ValueError('vector length {} != {}'.format(len(v), self.dim))
        r = self._reduce(v)
        p = next((i for i, x in enumerate(r) if x), None)
        if p is None:
            return False
        self._rows.append((p, r))
        self._rows.sort(key=lambda item: item[0])
        return True


def leading_principal_minors(A):
    """
    Determinants of the leading k x k blocks, k = 1..n, read off one Bareiss
    pass without pivoting. A zero minor stops the pass with ValueError.
    """
    A = _as_int_matrix(A)
    if A.rows != A.cols:
        raise ValueError('leading minors of a non-square matrix')
    n = A.rows
    m = A.to_lists()
    minors = []
    prev = 1
    for k in range(n):
        pivot = m[k][k]
        if pivot == 0:
            raise ValueError('leading minor of order {} vanishes'.format(k + 1))
        minors.append(pivot)
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
        prev = pivot
    return minors


def ldl_solve(L, D, b):
    """Solve (L D Lᵀ) x = b exactly."""
    n = len(D)
    y = [Fraction(0)] * n
    for i in range(n):
        y[i] = Fraction(b[i]) - sum((L[i][k] * y[k] for k in range(i)),
                                    Fraction(0))
    z = [y[i] / D[i] for i in range(n)]
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        x[i] = z[i] - sum((L[k][i] * x[k] for k in range(i + 1, n)),
                          Fraction(0))
    return x
