# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""
L(G): vectors X = (x_1, ..., x_n, x_{n+1}) of A_n (zero coordinate sum)
with x_1 g_1 + ... + x_n g_n = 0 in G, where g_1, ..., g_n are the nonzero
elements in canonical order and x_{n+1} is the balancing slot.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
from collections import namedtuple
from math import isqrt

from core.exact_linalg import IntMatrix
from core.exact_linalg import bareiss_det
from core.exact_linalg import gram
from core.exact_linalg import parse_matrix_text
from groups import parse_group
from utils.errors import MatrixFormatError
from utils.errors import VerificationError


DetIdentity = namedtuple('DetIdentity', ['det_cubed', 'holds'])


def complete_vector(x):
    """Append the balancing coordinate to a length-n vector."""
    x = [int(v) for v in x]
    return x + [-sum(x)]


def membership(G, x):
    x = [int(v) for v in x]
    if len(x) == G.n:
        x = complete_vector(x)
    elif len(x) != G.n + 1:
        raise ValueError('vector of length {} for {} (expected {} or {})'.format(
            len(x), G.spec, G.n, G.n + 1))
    if sum(x):
        return False
    return G.weighted_sum(x[:G.n]) == G.zero


def norm_sq(x):
    return sum(v * v for v in x)


class LatticeBasis(object):
    """An (n+1) x n basis matrix of L(G); rows in canonical coordinate order."""

    def __init__(self, group, matrix):
        if matrix.rows != group.n + 1 or matrix.cols != group.n:
            raise ValueError('basis of {} must be {}x{}, got {}x{}'.format(
                group.spec, group.n + 1, group.n, matrix.rows, matrix.cols))
        self.group = group
        self.matrix = matrix

    @property
    def n(self):
        return self.group.n

    def columns(self):
        return self.matrix.columns()

    def norms_sq(self):
        return [norm_sq(c) for c in self.columns()]

    def gram(self):
        return gram(self.matrix)

    def gram_det(self):
        return bareiss_det(self.gram())

    def check(self, norm_sq_expected=None):
        """List of failed checks (empty if the basis is valid)."""
        failures = []
        for j, col in enumerate(self.columns()):
            if not membership(self.group, col):
                failures.append('column {} is not in L({})'.format(
                    j, self.group.spec))
            if norm_sq_expected is not None and norm_sq(col) != norm_sq_expected:
                failures.append('column {} has norm^2 {} != {}'.format(
                    j, norm_sq(col), norm_sq_expected))
        det = self.gram_det()
        if det != self.group.order ** 3:
            failures.append('det gram = {} != |G|^3 = {}'.format(
                det, self.group.order ** 3))
        return failures

    def validate(self, norm_sq_expected=None):
        failures = self.check(norm_sq_expected)
        if failures:
            raise VerificationError('basis of L({}) failed: {}'.format(
                self.group.spec, '; '.join(failures)))
        return self

    def generator_first_order(self):
        """Row permutation putting the standard generators first."""
        G = self.group
        gen_rows = [G.coordinate(g) for g in G.generators()]
        rest = [i for i in range(G.n) if i not in set(gen_rows)]
        return gen_rows + rest + [G.n]

    def generator_first_matrix(self):
        return self.matrix.select_rows(self.generator_first_order())

    def to_text(self):
        return '# group {}\n{}'.format(self.group.spec, self.matrix.to_text())

    def __eq__(self, other):
        return isinstance(other, LatticeBasis) and \
            self.group == other.group and self.matrix == other.matrix

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.group, self.matrix))

    def __repr__(self):
        return 'LatticeBasis({}, {})'.format(self.group.spec, self.matrix)


def parse_basis_text(text, group=None):
    """
    Read a basis written by ``LatticeBasis.to_text``. An explicit group
    overrides the ``# group`` header.
    """
    header = None
    for line in text.splitlines():
        line = line.strip()
        if line.startswith('#') and line[1:].strip().lower().startswith('group'):
            header = line[1:].strip()[len('group'):].strip()
            break
    if group is None:
        if header is None:
            raise MatrixFormatError('no "# group" header and no group given')
        group = parse_group(header)
    matrix = parse_matrix_text(text)
    if matrix.rows != group.n + 1:
        raise MatrixFormatError('{} rows do not fit {} (n+1 = {})'.format(
            matrix.rows, group.spec, group.n + 1))
    return group, matrix


def canonical_basis(G):
    """
    Generator columns m_i (e_i) - m_i (last slot), then one column per
    non-generator g = (j_1, ..., j_k): 1 at g, -j_i at each generator and
    sum(j) - 1 in the last slot.
    """
    n = G.n
    gens = G.generators()
    gen_set = set(gens)
    columns = []
    for g, m in zip(gens, G.moduli):
        v = [0] * (n + 1)
        v[G.coordinate(g)] = m
        v[n] = -m
        columns.append(v)
    for g in G.nonzero:
        if g in gen_set:
            continue
        v = [0] * (n + 1)
        v[G.coordinate(g)] = 1
        for e, j in zip(gens, g):
            if j:
                v[G.coordinate(e)] -= j
        v[n] = sum(g) - 1
        columns.append(v)
    basis = LatticeBasis(G, IntMatrix.from_columns(columns))
    logging.debug('=> canonical basis of L({}) with {} columns'.format(
        G.spec, len(columns)))
    return basis.validate()


def verify_det_identity(G):
    det = canonical_basis(G).gram_det()
    return DetIdentity(det_cubed=det, holds=det == G.order ** 3)


def root_lattice_basis(n):
    """Columns e_i - e_{n+1} of A_n."""
    columns = []
    for i in range(n):
        v = [0] * (n + 1)
        v[i] = 1
        v[n] = -1
        columns.append(v)
    return IntMatrix.from_columns(columns)


def index_in_root_lattice(G):
    """|A_n : L(G)| from the ratio of Gram determinants."""
    ratio, rem = divmod(canonical_basis(G).gram_det(),
                        bareiss_det(gram(root_lattice_basis(G.n))))
    root = isqrt(ratio)
    if rem or root * root != ratio:
        raise VerificationError('Gram ratio {} for {} is not a square'.format(
            ratio, G.spec))
    return root
