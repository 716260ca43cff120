# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""
Re-run every constructive and numerical check in one go:

    python tools/reproduce.py --cfg experiments/lattice/full.yaml
    python tools/reproduce.py --cfg experiments/lattice/quick.yaml PROGRESS True

Exits with status 1 if any check fails.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import argparse
import logging
import math
import pprint
import random
import sys
import timeit
from collections import OrderedDict
from fractions import Fraction

from tqdm import tqdm

import _init_paths
from arrays import build_minimal_basis
from arrays.cyclic import cyclic_basis
from config import config
from config import update_config
from core.automorphism import unit_count
from core.automorphism import verify_automorphism_correspondence
from core.covering import COVERING_LOWER_BOUNDS_SQ
from core.covering import KNOWN_COVERING_RADII_SQ
from core.covering import bounds_table
from core.covering import certified_lower_bound_sq
from core.covering import closed_form_grams
from core.covering import deep_hole_estimate
from core.covering import mu_root_lattice
from core.covering import recursive_bound
from core.covering import sha_round
from core.covering import SQRT2
from core.covering import TABULATED_Z6_RADIUS_SQ
from core.exact_linalg import cauchy_binet_check
from core.lattice import canonical_basis
from core.lattice import verify_det_identity
from core.minvec import minimum_distance
from groups import groups_up_to
from groups import parse_group
from utils.errors import NotWellRoundedError
from utils.utils import create_logger
from utils.utils import format_fixed
from utils.utils import fraction_text

# n: (mu(A_n), closed-form bound, mu(A_n) + sqrt 2), four decimals
PRINTED_TABLE = OrderedDict([
    (3, ('1.0000', '1.8257', '2.4142')),
    (4, ('1.0954', '1.9443', '2.5097')),
    (5, ('1.2247', '2.0477', '2.6390')),
    (6, ('1.3093', '2.1408', '2.7235')),
    (20, ('2.2887', '3.0210', '3.7029')),
    (50, ('3.5700', '4.1831', '4.9842')),
    (100, ('5.0247', '5.5387', '6.4389')),
    (1000, ('15.8193', '16.0613', '17.2335')),
    (10000, ('50.0025', '50.1026', '51.4167')),
    (100000, ('158.1147', '158.1536', '159.5289')),
    (1000000, ('500.0002', '500.0149', '501.4145')),
])

Z4_RECURSION = [Fraction(3, 2), Fraction(7, 3), Fraction(47, 15)]


def parse_args():
    parser = argparse.ArgumentParser(description='Reproduce the L(G) checks')
    parser.add_argument('--cfg',
                        help='experiment configure file name',
                        default='',
                        type=str)
    parser.add_argument('opts',
                        help='Modify config options using the command-line',
                        default=None,
                        nargs=argparse.REMAINDER)
    args = parser.parse_args()
    update_config(config, args)
    return args


def _progress(items, cfg, desc):
    return tqdm(items, desc=desc, disable=not cfg.PROGRESS, file=sys.stderr)


def check_det_identity(cfg):
    failures = []
    for G in _progress(groups_up_to(cfg.REPRODUCE.MAX_ORDER), cfg, 'det'):
        if not verify_det_identity(G).holds:
            failures.append(G.spec)
    return failures


def check_cauchy_binet(cfg):
    failures = []
    cap = cfg.LINALG.CAUCHY_BINET_MAX_ROWS
    groups = [G for G in groups_up_to(cfg.REPRODUCE.MAX_ORDER) if G.n < cap]
    for G in _progress(groups, cfg, 'minors'):
        check = cauchy_binet_check(canonical_basis(G).matrix, max_rows=cap)
        if not check.equal or check.rhs != G.order ** 3:
            failures.append('{} ({} vs {})'.format(G.spec, check.lhs, check.rhs))
    return failures


def check_minimum_distance(cfg):
    failures = []
    for G in _progress(groups_up_to(cfg.REPRODUCE.MAX_ORDER), cfg, 'minvec'):
        report = minimum_distance(G)
        expected = {(2,): 8, (3,): 6}.get(G.moduli, 4)
        if report.d_squared != expected or \
                report.well_rounded != (G.moduli != (4,)):
            failures.append('{} (d^2 = {}, well-rounded = {})'.format(
                G.spec, report.d_squared, report.well_rounded))
    return failures


def check_builder(cfg):
    failures = []
    for G in _progress(groups_up_to(cfg.REPRODUCE.MAX_ORDER), cfg, 'build'):
        try:
            result = build_minimal_basis(
                G, seed=cfg.SEED,
                allow_fallback=cfg.BASIS.ALLOW_FALLBACK,
                restarts=cfg.BASIS.FALLBACK_RESTARTS,
                step_factor=cfg.BASIS.FALLBACK_STEP_FACTOR)
        except NotWellRoundedError:
            if G.moduli != (4,):
                failures.append('{} reported not well-rounded'.format(G.spec))
            continue
        if G.moduli == (4,):
            failures.append('Z4 produced a basis')
        elif result.basis.gram_det() != G.order ** 3:
            failures.append(G.spec)
    return failures


def check_closed_forms(cfg):
    failures = []
    top = cfg.REPRODUCE.GRAM_MAX_N
    for n in _progress(range(2, top + 1), cfg, 'gram'):
        for k in (n - 1, n):
            cf = closed_form_grams(n, k)
            if cf.det_closed != cf.det_bareiss:
                failures.append('n = {}, k = {}'.format(n, k))
    return failures


def check_table(cfg):
    failures = []
    mode = cfg.COVERING.ROUNDING
    reports = bounds_table(list(PRINTED_TABLE),
                           recursive_cap=cfg.COVERING.RECURSIVE_CAP)
    for report in reports:
        got = tuple(format_fixed(v, 4, mode)
                    for v in (report.mu_An, report.barnes, report.sha))
        if got != PRINTED_TABLE[report.n]:
            failures.append('n = {}: {} vs {}'.format(
                report.n, got, PRINTED_TABLE[report.n]))
    return failures


def check_z4_recursion(cfg):
    trace = recursive_bound(cyclic_basis(3))
    if trace.r_sq != Z4_RECURSION:
        return [' -> '.join(fraction_text(r) for r in trace.r_sq)]
    return []


def check_estimates(cfg):
    failures = []
    for spec in _progress(cfg.REPRODUCE.ESTIMATE_GROUPS, cfg, 'estimate'):
        G = parse_group(spec)
        est = deep_hole_estimate(G, samples=cfg.COVERING.SAMPLES,
                                 seed=cfg.SEED,
                                 top_k=cfg.COVERING.ASCENT_TOP_K,
                                 iters=cfg.COVERING.ASCENT_ITERS,
                                 initial_step=cfg.COVERING.INITIAL_STEP,
                                 chunk=cfg.COVERING.CHUNK)
        if G.moduli in KNOWN_COVERING_RADII_SQ:
            exact = math.sqrt(KNOWN_COVERING_RADII_SQ[G.moduli])
            logging.info('=> {}: estimate {:.6f}, exact {:.6f}'.format(
                G.spec, est, exact))
            if est > exact + 1e-9 or est < exact - 1e-2:
                failures.append('{}: {:.6f} vs {:.6f}'.format(
                    G.spec, est, exact))
            continue
        lower_sq = certified_lower_bound_sq(G)
        if lower_sq is None:
            logging.info('=> {}: estimate {:.6f}, no reference'.format(
                G.spec, est))
            continue
        if lower_sq != COVERING_LOWER_BOUNDS_SQ[G.moduli]:
            failures.append('{}: far point at {}, expected {}'.format(
                G.spec, fraction_text(lower_sq),
                fraction_text(COVERING_LOWER_BOUNDS_SQ[G.moduli])))
        lower = math.sqrt(lower_sq)
        sha = mu_root_lattice(G.n) + SQRT2
        logging.info('=> {}: estimate {:.6f}, certified lower bound {:.6f}'
                     .format(G.spec, est, lower))
        if G.moduli == (6,):
            logging.info('=> Z6: tabulated mu^2 = {} is inconsistent, a point '
                         'at squared distance {} exists'.format(
                             fraction_text(TABULATED_Z6_RADIUS_SQ),
                             fraction_text(lower_sq)))
        if est < lower - 1e-2 or est > sha:
            failures.append('{}: {:.6f} outside [{:.6f}, {:.6f}]'.format(
                G.spec, est, lower, sha))
    return failures


def _random_point(rng, size):
    x = [Fraction(rng.randint(-2000, 2000), 211) for _ in range(size - 1)]
    return x + [-sum(x)]


def check_sha_walk(cfg):
    failures = []
    rng = random.Random(cfg.SEED)
    for G in _progress(groups_up_to(cfg.REPRODUCE.SHA_MAX_ORDER), cfg, 'sha'):
        bound = mu_root_lattice(G.n) + SQRT2 + 1e-12
        worst = 0.0
        for _ in range(cfg.REPRODUCE.SHA_POINTS):
            worst = max(worst, sha_round(G, _random_point(rng, G.n + 1)).dist)
        if worst > bound:
            failures.append('{}: {:.6f} > {:.6f}'.format(G.spec, worst, bound))
    return failures


def check_automorphisms(cfg):
    failures = []
    top = cfg.REPRODUCE.AUT_MAX_ORDER
    for G in _progress(groups_up_to(top), cfg, 'aut'):
        result = verify_automorphism_correspondence(
            G, group_cap=cfg.AUT.GROUP_CAP, stabilizer_cap=cfg.AUT.STABILIZER_CAP)
        if not result.equal:
            failures.append(G.spec)
        elif G.rank == 1 and result.order != unit_count(G.order):
            failures.append('|Aut({})| = {} vs {}'.format(
                G.spec, result.order, unit_count(G.order)))
    return failures


CHECKS = [
    ('determinant identity', check_det_identity),
    ('Cauchy-Binet expansion', check_cauchy_binet),
    ('minimum distance', check_minimum_distance),
    ('minimal-vector bases', check_builder),
    ('closed-form Gram determinants', check_closed_forms),
    ('bounds table', check_table),
    ('Z4 recursion', check_z4_recursion),
    ('deep hole estimates', check_estimates),
    ('rounding walk', check_sha_walk),
    ('automorphism correspondence', check_automorphisms),
]


def main():
    args = parse_args()
    logger, final_output_dir = create_logger(config, 'reproduce')
    logger.info(pprint.pformat(args))
    logger.info(config)

    failed = 0
    for name, check in CHECKS:
        start = timeit.default_timer()
        failures = check(config)
        elapsed = timeit.default_timer() - start
        status = 'ok' if not failures else 'FAILED'
        logger.info('=> {:<32s} {:>6s}  {:.2f}s'.format(name, status, elapsed))
        for f in failures:
            logger.info('   {}'.format(f))
        failed += bool(failures)

    logger.info('=> {} of {} checks passed'.format(len(CHECKS) - failed,
                                                  len(CHECKS)))
    return 1 if failed else 0


if __name__ == '__main__':
    sys.exit(main())
