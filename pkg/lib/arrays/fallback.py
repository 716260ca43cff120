# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""
Randomised search for a basis of minimal vectors.

A greedy pass picks n independent vectors of S(G). Exchange steps then
replace column i by a minimal vector v: with adj the integer adjugate of
the Gram matrix and D its determinant, the Gram determinant after the swap
is (adj B^T v)_i^2 / D, so any v with 0 < |(adj B^T v)_i| < D shrinks the
index of the spanned sublattice. At a local minimum a random move with
|(adj B^T v)_i| = D keeps the index and shakes the basis.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging

import numpy as np

from core.exact_linalg import EchelonBasis
from core.exact_linalg import IntMatrix
from core.exact_linalg import adjugate
from core.exact_linalg import gram
from core.lattice import LatticeBasis
from core.minvec import minimum_distance
from utils.errors import BudgetExhaustedError
from utils.errors import NotWellRoundedError

_INT64_SAFE = 2 ** 62


def _coefficient_table(basis_cols, S):
    """(adj B^T) S as an n x |S| array, plus the Gram determinant."""
    B = IntMatrix.from_columns(basis_cols)
    adj, det = adjugate(gram(B))
    P = adj.matmul(B.transpose())
    bound = max(abs(x) for row in P.to_lists() for x in row)
    width = max(1, max(abs(x) for row in S for x in row))
    if bound * width * len(S[0]) < _INT64_SAFE:
        C = P.to_numpy(np.int64) @ np.array(S, dtype=np.int64).T
    else:
        C = np.array(P.to_lists(), dtype=object) @ \
            np.array(S, dtype=object).T
    return C, det


def _greedy(S, order, n):
    echelon = EchelonBasis(len(S[0]))
    chosen = []
    for k in order:
        if echelon.add(S[k]):
            chosen.append(int(k))
            if len(chosen) == n:
                break
    return chosen


def fallback_greedy_basis(G, seed=0, restarts=64, step_factor=10, vectors=None):
    report = None
    if vectors is None:
        report = minimum_distance(G)
        vectors = report.vectors
        if not report.well_rounded:
            raise NotWellRoundedError(
                'L({}) is not well-rounded (rank of S(G) is {} < {})'.format(
                    G.spec, report.rank, G.n))
    S = [tuple(v) for v in vectors]
    n = G.n
    target = G.order ** 3
    max_steps = step_factor * n * n
    rng = np.random.default_rng(seed)

    for restart in range(restarts):
        chosen = _greedy(S, rng.permutation(len(S)), n)
        if len(chosen) < n:
            raise NotWellRoundedError(
                'minimal vectors of L({}) span rank {} < {}'.format(
                    G.spec, len(chosen), n))
        for step in range(max_steps + 1):
            C, det = _coefficient_table([S[k] for k in chosen], S)
            if det == target:
                basis = LatticeBasis(
                    G, IntMatrix.from_columns([S[k] for k in chosen]))
                logging.info('=> fallback basis for {} after {} restarts, '
                             '{} steps (seed {})'.format(
                                 G.spec, restart, step, seed))
                return basis.validate(norm_sq_expected=sum(x * x for x in S[0]))
            if step == max_steps:
                break
            A = np.abs(C)
            improving = np.argwhere((A > 0) & (A < det))
            if len(improving):
                values = A[improving[:, 0], improving[:, 1]]
                best = np.flatnonzero(values == values.min())
                i, k = improving[best[rng.integers(len(best))]]
            else:
                plateau = np.argwhere(A == det)
                fresh = [int(k) not in chosen for k in plateau[:, 1]]
                plateau = plateau[np.array(fresh, dtype=bool)] if fresh \
                    else plateau
                if not len(plateau):
                    break
                i, k = plateau[rng.integers(len(plateau))]
            chosen[int(i)] = int(k)
        logging.debug('=> fallback restart {} for {} stalled'.format(
            restart, G.spec))

    raise BudgetExhaustedError(
        'no basis of minimal vectors found for {} within {} restarts x {} '
        'steps (seed {})'.format(G.spec, restarts, max_steps, seed), seed=seed)
