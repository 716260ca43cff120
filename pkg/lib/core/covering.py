# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""
Covering radius of L(G): closed forms for A_n, analytic and recursive upper
bounds, exact closest-vector search, the rounding walk through A_n, and an
empirical deep-hole search that produces lower-bound evidence.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
import logging
import math
from collections import namedtuple
from fractions import Fraction

import numpy as np

from arrays.builder import build_minimal_basis
from arrays.cyclic import cyclic_basis
from core.exact_linalg import IntMatrix
from core.exact_linalg import bareiss_det
from core.exact_linalg import gram
from core.exact_linalg import ldl_decompose
from core.exact_linalg import ldl_solve
from core.exact_linalg import leading_principal_minors
from core.lattice import LatticeBasis
from core.lattice import canonical_basis
from utils.errors import CapExceededError
from utils.errors import VerificationError


SQRT2 = math.sqrt(2.0)

# exact mu(G)^2 for the small groups where it is known
KNOWN_COVERING_RADII_SQ = {
    (2,): Fraction(2),
    (3,): Fraction(2),
    (4,): Fraction(9, 4),
    (2, 2): Fraction(3),
    (5,): Fraction(2),
}

# mu(Z6)^2 is tabulated as 17/8, but Z6_FAR_POINT lies at squared distance
# 22/9 from L(Z6), so only that lower bound is kept for Z6.
TABULATED_Z6_RADIUS_SQ = Fraction(17, 8)
Z6_FAR_POINT = tuple(Fraction(v) for v in
                     ('-2/3', '2/3', '0', '-2/3', '-1/3', '1'))
COVERING_LOWER_BOUNDS_SQ = {
    (6,): Fraction(22, 9),
}
COVERING_WITNESSES = {
    (6,): Z6_FAR_POINT,
}

AnalyticBounds = namedtuple('AnalyticBounds', ['mu_An', 'barnes', 'sha'])
ClosedFormGram = namedtuple('ClosedFormGram',
                            ['matrix', 'det_closed', 'det_bareiss'])
CVPResult = namedtuple('CVPResult', ['lattice_point', 'coefficients', 'dist_sq'])
RoundingResult = namedtuple('RoundingResult',
                            ['lattice_point', 'dist_sq', 'dist'])


def known_covering_radius(G):
    sq = KNOWN_COVERING_RADII_SQ.get(G.moduli)
    return None if sq is None else math.sqrt(sq)


def certified_lower_bound_sq(G):
    """
    Exact mu(G)^2 where known, otherwise the exact squared distance from a
    stored far point to L(G); None when neither exists.
    """
    if G.moduli in KNOWN_COVERING_RADII_SQ:
        return KNOWN_COVERING_RADII_SQ[G.moduli]
    point = COVERING_WITNESSES.get(G.moduli)
    if point is None:
        return None
    return cvp_nearest(canonical_basis(G), point).dist_sq


class RecursiveBoundTrace(object):
    """V_k^2 (Gram determinants of basis prefixes) and r_k^2."""

    def __init__(self, V_sq, r_sq):
        self.V_sq = V_sq
        self.r_sq = r_sq

    @property
    def bound_sq(self):
        return self.r_sq[-1]

    @property
    def bound(self):
        return math.sqrt(self.bound_sq)

    def __repr__(self):
        return 'RecursiveBoundTrace(r_sq={})'.format(
            [str(r) for r in self.r_sq])


class CoveringReport(object):

    def __init__(self, n, mu_An, barnes, sha, recursive_sq=None,
                 deep_hole_estimate=None, group=None, known=None,
                 lower_bound=None):
        self.n = n
        self.mu_An = mu_An
        self.barnes = barnes
        self.sha = sha
        self.recursive_sq = recursive_sq
        self.deep_hole_estimate = deep_hole_estimate
        self.group = group
        self.known = known
        self.lower_bound = lower_bound

    @property
    def recursive(self):
        if self.recursive_sq is None:
            return None
        return math.sqrt(self.recursive_sq)

    def upper_bounds(self):
        bounds = [b for b in (self.barnes, self.sha, self.recursive)
                  if b is not None]
        return bounds

    def to_dict(self):
        out = {
            'n': self.n,
            'mu_An': self.mu_An,
            'barnes': self.barnes,
            'sha': self.sha,
            'recursive_sq': None if self.recursive_sq is None
            else str(self.recursive_sq),
            'recursive': self.recursive,
        }
        if self.group is not None:
            out['group'] = self.group
        if self.deep_hole_estimate is not None:
            out['deep_hole_estimate'] = self.deep_hole_estimate
        if self.known is not None:
            out['known'] = self.known
        if self.lower_bound is not None:
            out['lower_bound'] = self.lower_bound
        return out


def mu_root_lattice(n):
    if n < 1:
        raise ValueError('n must be >= 1, got {}'.format(n))
    if n % 2:
        return 0.5 * math.sqrt(n + 1)
    return 0.5 * math.sqrt(n + 1 - 1.0 / (n + 1))


def barnes_bound(n):
    return 0.5 * math.sqrt(n + 4 * math.log(n - 1) + 7 - 4 * math.log(2)
                           + 10.0 / n)


def barnes_sharp(n):
    """The bound before (10n+8)/(n(n+2)) is relaxed to 10/n."""
    return 0.5 * math.sqrt(n + 4 * math.log(n - 1) + 7 - 4 * math.log(2)
                           + (10.0 * n + 8) / (n * (n + 2)))


def analytic_bounds(n):
    if n < 2:
        raise ValueError('analytic bounds need n >= 2, got {}'.format(n))
    mu = mu_root_lattice(n)
    return AnalyticBounds(mu_An=mu, barnes=barnes_bound(n), sha=mu + SQRT2)


def banded_det(k):
    """det R_k = (k+1)(k+2)^2(k+3)/12."""
    return (k + 1) * (k + 2) ** 2 * (k + 3) // 12


def banded_gram(k, wrap=False):
    """R_k (6 / -4 / 1 bands), or Q_k with 1 added at the two corners."""
    band = {0: 6, 1: -4, 2: 1}
    rows = [[band.get(abs(i - j), 0) for j in range(k)] for i in range(k)]
    if wrap:
        rows[0][k - 1] += 1
        rows[k - 1][0] += 1
    return IntMatrix(rows)


def closed_form_grams(n, k):
    if n < 2 or not 1 <= k <= n:
        raise ValueError('need n >= 2 and 1 <= k <= n, got n={}, k={}'.format(
            n, k))
    prefix = cyclic_basis(n).matrix.submatrix_columns(k)
    G = gram(prefix)
    wrap = k == n
    expected = banded_gram(k, wrap=wrap)
    if G != expected:
        raise VerificationError('Gram of B_{{{},{}}} is not the banded form'.format(
            n + 1, k))
    det_closed = (n + 1) ** 3 if wrap else banded_det(k)
    return ClosedFormGram(matrix=G, det_closed=det_closed,
                          det_bareiss=bareiss_det(G))


def _recursion(V_sq, r1_sq):
    r_sq = [Fraction(r1_sq)]
    for k in range(1, len(V_sq)):
        r_sq.append(r_sq[-1] + Fraction(V_sq[k], 4 * V_sq[k - 1]))
    return r_sq


def _matrix_of(basis):
    return basis.matrix if isinstance(basis, LatticeBasis) else basis


def recursive_bound(basis, r1_sq=None):
    """r_{k+1}^2 = r_k^2 + V_{k+1}^2 / (4 V_k^2), in the given column order."""
    B = _matrix_of(basis)
    try:
        V_sq = leading_principal_minors(gram(B))
    except ValueError as e:
        raise ValueError('degenerate basis prefix: {}'.format(e))
    if r1_sq is None:
        r1_sq = Fraction(V_sq[0], 4)
    return RecursiveBoundTrace(V_sq, _recursion(V_sq, r1_sq))


def cyclic_recursive_sq(n):
    """Recursive bound of L(Z_{n+1}) on B_{n+1,n}, from the closed forms."""
    if n < 2:
        raise ValueError('n must be >= 2, got {}'.format(n))
    V_sq = [banded_det(k) for k in range(1, n)] + [(n + 1) ** 3]
    return _recursion(V_sq, Fraction(V_sq[0], 4))[-1]


def _as_fractions(point):
    return [v if isinstance(v, Fraction) else Fraction(v) for v in point]


def _check_zero_sum(point, size):
    if len(point) != size:
        raise ValueError('point of length {} (expected {})'.format(
            len(point), size))
    if sum(point) != 0:
        raise ValueError('point does not lie in the span of A_n '
                         '(coordinate sum {})'.format(sum(point)))


def nearest_root_lattice_point(x):
    """Nearest point of A_n: round, then repair the sum on the worst errors."""
    x = _as_fractions(x)
    f = [math.floor(v + Fraction(1, 2)) for v in x]
    delta = sum(f)
    if delta:
        err = [fi - xi for fi, xi in zip(f, x)]
        if delta > 0:
            fix = sorted(range(len(x)), key=lambda i: (-err[i], i))[:delta]
            for i in fix:
                f[i] -= 1
        else:
            fix = sorted(range(len(x)), key=lambda i: (err[i], i))[:-delta]
            for i in fix:
                f[i] += 1
    return f


def _group_correction(G, v):
    s = G.weighted_sum(v[:G.n])
    if s != G.zero:
        j = G.coordinate(s)
        v[j] -= 1
        v[G.n] += 1
    return v


def _rounding_result(x, v):
    dist_sq = sum(((xi - vi) ** 2 for xi, vi in zip(x, v)), Fraction(0))
    return RoundingResult(lattice_point=tuple(v), dist_sq=dist_sq,
                          dist=math.sqrt(dist_sq))


def sha_round(G, point):
    """Nearest A_n point, then one -e_j + e_{n+1} step into L(G)."""
    x = _as_fractions(point)
    _check_zero_sum(x, G.n + 1)
    v = _group_correction(G, nearest_root_lattice_point(x))
    return _rounding_result(x, v)


def naive_round(G, point):
    """Round the first n coordinates and balance the last one."""
    x = _as_fractions(point)
    _check_zero_sum(x, G.n + 1)
    v = [math.floor(xi + Fraction(1, 2)) for xi in x[:G.n]]
    v.append(-sum(v))
    v = _group_correction(G, v)
    return _rounding_result(x, v)


def cvp_nearest(basis, point):
    """Exact closest vector by depth-first enumeration over LDLᵀ levels."""
    B = _matrix_of(basis)
    t = _as_fractions(point)
    _check_zero_sum(t, B.rows)
    n = B.cols
    L, D = ldl_decompose(gram(B))
    Bt_t = [sum((B[i, j] * t[i] for i in range(B.rows)), Fraction(0))
            for j in range(n)]
    y = ldl_solve(L, D, Bt_t)

    def dist_sq_of(z):
        p = [sum(B[i, j] * z[j] for j in range(n)) for i in range(B.rows)]
        return sum(((pi - ti) ** 2 for pi, ti in zip(p, t)), Fraction(0))

    best_z = [math.floor(v + Fraction(1, 2)) for v in y]
    best = [dist_sq_of(best_z), best_z]
    if isinstance(basis, LatticeBasis):
        seed = sha_round(basis.group, t)
        z = ldl_solve(L, D, [sum(B[i, j] * seed.lattice_point[i]
                                 for i in range(B.rows)) for j in range(n)])
        if all(v.denominator == 1 for v in z) and seed.dist_sq < best[0]:
            best = [seed.dist_sq, [int(v) for v in z]]

    z = [0] * n

    def search(j, partial):
        c = y[j] - sum((L[i][j] * (z[i] - y[i]) for i in range(j + 1, n)),
                       Fraction(0))
        room = best[0] - partial
        if room < 0:
            return
        width = math.sqrt(room / D[j]) + 1
        cf = float(c)
        candidates = range(math.floor(cf - width), math.ceil(cf + width) + 1)
        for zj in sorted(candidates, key=lambda v: abs(v - cf)):
            total = partial + D[j] * (zj - c) ** 2
            if total > best[0]:
                continue
            z[j] = zj
            if j == 0:
                if total < best[0]:
                    best[0], best[1] = total, list(z)
            else:
                search(j - 1, total)

    search(n - 1, Fraction(0))
    best_z = best[1]
    point_out = tuple(sum(B[i, j] * best_z[j] for j in range(n))
                      for i in range(B.rows))
    return CVPResult(lattice_point=point_out, coefficients=tuple(best_z),
                     dist_sq=best[0])


class NearestPointSolver(object):
    """
    Vectorised float distance to the lattice. Points are reduced to
    coefficients in [0, 1); the nearest lattice point then has coefficients
    in a fixed box derived from a covering radius bound R and diag(G^-1).
    """

    def __init__(self, basis, radius, max_candidates=2000000, chunk=1024):
        B = _matrix_of(basis).to_numpy(float)
        self.B = B
        self.G_inv = np.linalg.inv(B.T @ B)
        self.coef_map = B @ self.G_inv
        reach = radius * np.sqrt(np.diag(self.G_inv))
        ranges = [range(int(math.floor(-r)) - 1, int(math.ceil(1 + r)) + 1)
                  for r in reach]
        count = 1
        for r in ranges:
            count *= len(r)
        if count > max_candidates:
            raise CapExceededError(
                'nearest point box holds {} candidates (cap {})'.format(
                    count, max_candidates))
        Z = np.array(list(itertools.product(*ranges)), dtype=float)
        self.points = Z @ B.T
        self.points_sq = np.einsum('ij,ij->i', self.points, self.points)
        self.chunk = max(1, min(chunk, int(4e6 // max(1, len(Z)))))

    def _reduce(self, X):
        Y = X @ self.coef_map
        return X - np.floor(Y) @ self.B.T

    def distances(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        out = np.empty(len(X))
        for start in range(0, len(X), self.chunk):
            R = self._reduce(X[start:start + self.chunk])
            d2 = np.einsum('ij,ij->i', R, R)[:, None] - 2 * R @ self.points.T \
                + self.points_sq[None, :]
            out[start:start + self.chunk] = np.sqrt(np.maximum(d2.min(axis=1), 0))
        return out

    def nearest_points(self, x, count):
        """The count lattice points closest to x, nearest first."""
        x = np.asarray(x, dtype=float)
        shift = np.floor(x @ self.coef_map) @ self.B.T
        R = x - shift
        d2 = np.einsum('ij,ij->i', self.points - R, self.points - R)
        order = np.argsort(d2, kind='stable')[:count]
        return self.points[order] + shift


def estimation_basis(G, seed=0):
    if G.moduli == (4,):
        return cyclic_basis(3)
    return build_minimal_basis(G, seed=seed).basis


def _circumcenter(P):
    """Point of the zero-sum hyperplane equidistant from the rows of P."""
    p0 = P[0]
    A = 2 * (P[1:] - p0)
    b = np.einsum('ij,ij->i', P[1:], P[1:]) - p0 @ p0
    A = np.vstack([A, np.ones(P.shape[1])])
    b = np.append(b, 0.0)
    return np.linalg.lstsq(A, b, rcond=None)[0]


def _pair_directions(size):
    dirs = []
    for i, j in itertools.permutations(range(size), 2):
        d = np.zeros(size)
        d[i], d[j] = 1.0, -1.0
        dirs.append(d / SQRT2)
    return np.array(dirs)


def _random_directions(rng, count, size):
    D = rng.standard_normal((count, size))
    D -= D.mean(axis=1, keepdims=True)
    return D / np.linalg.norm(D, axis=1, keepdims=True)


def _ascend(solver, x, fx, rng, iters, step, fixed_dirs):
    size = len(x)
    for _ in range(iters):
        dirs = np.vstack([fixed_dirs, _random_directions(rng, 2 * size, size)])
        trial = x[None, :] + step * dirs
        d = solver.distances(trial)
        best = int(np.argmax(d))
        if d[best] > fx:
            x, fx = trial[best], d[best]
        else:
            step /= 2
    return x, fx


def _snap(solver, x, fx, size):
    for count in (size, size + 1, size + 2):
        c = _circumcenter(solver.nearest_points(x, count))
        fc = solver.distances(c)[0]
        if fc > fx:
            x, fx = c, fc
    return x, fx


def deep_hole_search(G, samples=5000, seed=0, top_k=16, iters=40,
                     initial_step=0.5, chunk=1024, basis=None):
    """Best point found and its distance to L(G) (a lower bound on mu)."""
    if samples < 1:
        raise ValueError('samples must be >= 1, got {}'.format(samples))
    if basis is None:
        basis = estimation_basis(G, seed=seed)
    n = G.n
    size = n + 1
    radius = mu_root_lattice(n) + SQRT2
    solver = NearestPointSolver(basis, radius, chunk=chunk)
    rng = np.random.default_rng(seed)

    X = rng.random((samples, n)) @ solver.B.T
    candidate = np.full(size, 0.5)
    candidate[n] = -n / 2.0
    X = np.vstack([X, candidate])
    dist = solver.distances(X)
    top = np.argsort(-dist, kind='stable')[:top_k]
    logging.debug('=> {}: best sampled distance {:.6f}'.format(
        G.spec, dist[top[0]]))

    fixed_dirs = _pair_directions(size)
    best_x, best_f = X[top[0]], dist[top[0]]
    for k in top:
        x, fx = _ascend(solver, X[k], dist[k], rng, iters, initial_step,
                        fixed_dirs)
        x, fx = _snap(solver, x, fx, size)
        if fx > best_f:
            best_x, best_f = x, fx
    return best_x, float(best_f)


def deep_hole_estimate(G, samples=5000, seed=0, **kwargs):
    return deep_hole_search(G, samples=samples, seed=seed, **kwargs)[1]


def bounds_table(ns, recursive_cap=512):
    reports = []
    for n in ns:
        bounds = analytic_bounds(n)
        recursive_sq = cyclic_recursive_sq(n) if n <= recursive_cap else None
        reports.append(CoveringReport(n, bounds.mu_An, bounds.barnes,
                                      bounds.sha, recursive_sq=recursive_sq))
    return reports


def covering_report(G, samples=5000, seed=0, **kwargs):
    """Bounds and a deep-hole estimate for one group."""
    n = G.n
    basis = estimation_basis(G, seed=seed)
    if n >= 2:
        bounds = analytic_bounds(n)
        mu, sha = bounds.mu_An, bounds.sha
        barnes = bounds.barnes if G.rank == 1 else None
    else:
        mu = mu_root_lattice(n)
        sha, barnes = mu + SQRT2, None
    estimate = deep_hole_estimate(G, samples=samples, seed=seed, basis=basis,
                                  **kwargs)
    lower_sq = certified_lower_bound_sq(G)
    return CoveringReport(n, mu, barnes, sha,
                          recursive_sq=recursive_bound(basis).bound_sq,
                          deep_hole_estimate=estimate, group=G.spec,
                          known=known_covering_radius(G),
                          lower_bound=None if lower_sq is None
                          else math.sqrt(lower_sq))
