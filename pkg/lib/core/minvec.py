# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
import logging
from collections import Counter
from collections import defaultdict

from core.exact_linalg import IntMatrix
from core.exact_linalg import integer_rank
from core.lattice import norm_sq

ALLOWED_NORMS = (2, 4, 6, 8)
SUPPORT_VALUES = (-2, -1, 1, 2)


class MinimalVectorReport(object):
    """d(G)^2, S(G), its rank and the well-roundedness flag."""

    def __init__(self, group, d_squared, vectors, rank):
        self.group = group
        self.d_squared = d_squared
        self.vectors = vectors
        self.rank = rank

    @property
    def count(self):
        return len(self.vectors)

    @property
    def well_rounded(self):
        return self.rank == self.group.n

    def __repr__(self):
        return 'MinimalVectorReport({}, d^2={}, |S|={}, rank={})'.format(
            self.group.spec, self.d_squared, self.count, self.rank)


def support_patterns(max_norm_sq):
    """
    Zero-sum multisets over {-2, -1, 1, 2} with squared norm <= max_norm_sq,
    as sorted value tuples.
    """
    patterns = []
    bound = max_norm_sq // 4
    for n2m in range(bound + 1):
        for n2p in range(bound + 1 - n2m):
            rest = max_norm_sq - 4 * (n2m + n2p)
            for n1m in range(rest + 1):
                n1p = n1m + 2 * n2m - 2 * n2p
                if n1p < 0 or n1p + n1m > rest:
                    continue
                if n2m + n2p + n1m + n1p == 0:
                    continue
                pattern = (-2,) * n2m + (-1,) * n1m + (1,) * n1p + (2,) * n2p
                patterns.append(pattern)
    return sorted(patterns, key=lambda p: (norm_sq(p), len(p), p))


def _placements(pattern, size):
    """All vectors of length size carrying the multiset pattern."""
    counts = sorted(Counter(pattern).items())

    def place(free, k):
        if k == len(counts):
            yield {}
            return
        value, c = counts[k]
        for chosen in itertools.combinations(free, c):
            left = [i for i in free if i not in chosen]
            for rest in place(left, k + 1):
                out = dict(rest)
                for i in chosen:
                    out[i] = value
                yield out

    for support in itertools.combinations(range(size), len(pattern)):
        for assignment in place(list(support), 0):
            yield assignment


def _weights(G):
    # the balancing slot carries the zero element
    return list(G.nonzero) + [G.zero]


def _vector(assignment, size):
    v = [0] * size
    for i, x in assignment.items():
        v[i] = x
    return tuple(v)


def _generic_vectors(G, pattern):
    weights = _weights(G)
    size = G.n + 1
    moduli = G.moduli
    found = []
    for assignment in _placements(pattern, size):
        acc = [0] * len(moduli)
        for i, x in assignment.items():
            for t, r in enumerate(weights[i]):
                acc[t] += x * r
        if all(a % m == 0 for a, m in zip(acc, moduli)):
            found.append(_vector(assignment, size))
    return found


def norm4_vectors(G):
    """
    Vectors with +1 on a pair P and -1 on a disjoint pair Q: members iff the
    two pair sums agree, so they come from a table keyed by pair sums.
    """
    weights = _weights(G)
    size = G.n + 1
    table = defaultdict(list)
    for a, b in itertools.combinations(range(size), 2):
        table[G.add(weights[a], weights[b])].append((a, b))
    found = []
    for pairs in table.values():
        for P, Q in itertools.permutations(pairs, 2):
            if set(P) & set(Q):
                continue
            v = [0] * size
            v[P[0]] = v[P[1]] = 1
            v[Q[0]] = v[Q[1]] = -1
            found.append(tuple(v))
    return found


def enumerate_short_vectors(G, max_norm_sq=8):
    """All nonzero members of L(G) with squared norm <= max_norm_sq, sorted."""
    if max_norm_sq not in ALLOWED_NORMS:
        raise ValueError('max_norm_sq must be one of {}, got {}'.format(
            ALLOWED_NORMS, max_norm_sq))
    vectors = set()
    for pattern in support_patterns(max_norm_sq):
        if len(pattern) > G.n + 1:
            continue
        if pattern == (-1, -1, 1, 1):
            vectors.update(norm4_vectors(G))
        else:
            vectors.update(_generic_vectors(G, pattern))
    logging.debug('=> {} vectors of norm^2 <= {} in L({})'.format(
        len(vectors), max_norm_sq, G.spec))
    return sorted(vectors)


def minimum_distance(G, thresholds=(4, 6, 8)):
    for threshold in thresholds:
        vectors = enumerate_short_vectors(G, threshold)
        if vectors:
            break
    else:
        raise RuntimeError('L({}) has no vector of norm^2 <= 8'.format(G.spec))
    d_squared = min(norm_sq(v) for v in vectors)
    minimal = [v for v in vectors if norm_sq(v) == d_squared]
    rank = integer_rank(IntMatrix.from_columns(minimal))
    report = MinimalVectorReport(G, d_squared, minimal, rank)
    logging.debug('=> {}'.format(report))
    return report


def well_rounded(G):
    return minimum_distance(G).well_rounded
