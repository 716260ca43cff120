# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from core.exact_linalg import IntMatrix
from core.exact_linalg import bareiss_det
from core.exact_linalg import gram
from core.lattice import LatticeBasis
from core.lattice import membership
from core.lattice import norm_sq
from utils.errors import VerificationError


class AdmissibleArray(object):
    """
    A labelled array g||M: row r of the n x n matrix M belongs to the
    nonzero element labels[r]; every column, extended by its negated
    column sum, is a vector of L(G).
    """

    def __init__(self, group, labels, M, name=None):
        labels = tuple(tuple(l) for l in labels)
        if len(labels) != group.n or set(labels) != set(group.nonzero):
            raise ValueError(
                'labels are not a permutation of the nonzero elements '
                'of {}'.format(group.spec))
        if M.rows != group.n or M.cols != group.n:
            raise ValueError('array matrix for {} must be {}x{}, got {}x{}'.format(
                group.spec, group.n, group.n, M.rows, M.cols))
        self.group = group
        self.labels = labels
        self.M = M
        self.name = name or group.spec

    @classmethod
    def from_sparse(cls, group, labels, columns, name=None):
        """Build from columns given as {label: entry} dicts."""
        labels = [tuple(l) for l in labels]
        known = set(labels)
        for col in columns:
            stray = set(col) - known
            if stray:
                raise ValueError('column refers to unknown labels {}'.format(
                    sorted(stray)))
        M = IntMatrix([[col.get(l, 0) for col in columns] for l in labels])
        return cls(group, labels, M, name=name)

    @property
    def n(self):
        return self.group.n

    @property
    def M_ext(self):
        sums = [-sum(c) for c in self.M.columns()]
        return IntMatrix(self.M.to_lists() + [sums])

    def det_M(self):
        return bareiss_det(self.M)

    def gram_det(self):
        return bareiss_det(gram(self.M_ext))

    def column_norms_sq(self):
        return [norm_sq(c) for c in self.M_ext.columns()]

    def canonical_matrix(self):
        """M_ext with rows moved to the canonical coordinate of their label."""
        G = self.group
        rows = [None] * (G.n + 1)
        M_ext = self.M_ext
        for r, label in enumerate(self.labels):
            rows[G.coordinate(label)] = M_ext.row(r)
        rows[G.n] = M_ext.row(G.n)
        return IntMatrix(rows)

    def to_basis(self):
        return LatticeBasis(self.group, self.canonical_matrix())

    def is_admissible(self):
        return all(membership(self.group, c)
                   for c in self.canonical_matrix().columns())

    def permute_rows(self, order):
        """Reorder rows (and labels) by the given row indices."""
        if sorted(order) != list(range(self.n)):
            raise ValueError('not a row permutation: {}'.format(order))
        return AdmissibleArray(self.group,
                               [self.labels[i] for i in order],
                               self.M.select_rows(order),
                               name=self.name)

    def relabel(self, group, mapping):
        """Carry the array along an isomorphism given as label -> element."""
        return AdmissibleArray(group, [mapping(l) for l in self.labels],
                               self.M, name=self.name)

    def verify(self, claim='basis', norm_sq_expected=None):
        failures = []
        if not self.is_admissible():
            failures.append('not admissible')
        if norm_sq_expected is not None:
            bad = [j for j, v in enumerate(self.column_norms_sq())
                   if v != norm_sq_expected]
            if bad:
                failures.append('columns {} do not have norm^2 {}'.format(
                    bad, norm_sq_expected))
        if claim == 'well_rounded':
            if self.det_M() == 0:
                failures.append('det M = 0')
        elif claim == 'basis':
            det = self.gram_det()
            if det != self.group.order ** 3:
                failures.append('det gram(M_ext) = {} != {}'.format(
                    det, self.group.order ** 3))
        else:
            raise ValueError('unknown claim {!r}'.format(claim))
        if failures:
            raise VerificationError('array {} failed: {}'.format(
                self.name, '; '.join(failures)))
        return self

    def __repr__(self):
        return 'AdmissibleArray({}, n={})'.format(self.name, self.n)


class BuildTrace(object):
    """Which construction produced which block."""

    def __init__(self, seed=0):
        self.steps = []
        self.fallback_used = False
        self.seed = seed

    def add(self, tag, *specs):
        self.steps.append((tag, tuple(specs)))

    def to_dict(self):
        return {
            'steps': [{'kind': tag, 'groups': list(specs)}
                      for tag, specs in self.steps],
            'fallback_used': self.fallback_used,
            'seed': self.seed,
        }

    def __len__(self):
        return len(self.steps)

    def __repr__(self):
        return 'BuildTrace({})'.format(self.to_dict())
