# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""
Command-line front end.

    python tools/lgtool.py group-info Z2xZ4
    python tools/lgtool.py minvec Z3 --json
    python tools/lgtool.py build-basis Z3xZ3xZ3 --seed 7 --out basis.txt
    python tools/lgtool.py covering-table --n 3,4,5,6,20,50,100 --format csv
    python tools/lgtool.py covering-estimate Z6 --samples 5000 --seed 0
    python tools/lgtool.py aut-verify Z2xZ4

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import argparse
import io
import logging
import pprint
import sys

import pandas as pd

import _init_paths
from arrays import build_minimal_basis
from config import config
from config import update_config
from core.automorphism import verify_automorphism_correspondence
from core.covering import bounds_table
from core.covering import covering_report
from core.exact_linalg import IntMatrix
from core.lattice import LatticeBasis
from core.lattice import canonical_basis
from core.lattice import membership
from core.lattice import norm_sq
from core.lattice import parse_basis_text
from core.minvec import enumerate_short_vectors
from core.minvec import minimum_distance
from groups import parse_group
from utils.errors import LatticeError
from utils.errors import MatrixFormatError
from utils.utils import create_logger
from utils.utils import dump_json
from utils.utils import format_fixed
from utils.utils import fraction_text

SUBCOMMANDS = ('group-info', 'basis', 'minvec', 'build-basis', 'verify',
               'covering-table', 'covering-estimate', 'aut-verify')


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError('{}\n{}'.format(self.format_usage().strip(), message))


def _flag(value):
    return 'true' if value else 'false'


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(
            'expected a positive integer, got {!r}'.format(text))
    return value


def _int_list(text):
    try:
        return [int(t) for t in text.split(',') if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma-separated integers, '
                                         'got {!r}'.format(text))


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help='machine readable output')
    common.add_argument('--cfg', type=str, default='',
                        help='experiment configure file name')
    common.add_argument('--opts', nargs=argparse.REMAINDER, default=[],
                        help='modify config options: KEY VALUE ...')

    parser = _Parser(description='Lattices L(G) of finite Abelian groups')
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)

    p = sub.add_parser('group-info', parents=[common],
                       help='moduli, order and element order')
    p.add_argument('group')

    p = sub.add_parser('basis', parents=[common],
                       help='canonical basis and determinant identity')
    p.add_argument('group')

    p = sub.add_parser('minvec', parents=[common],
                       help='minimum distance and minimal vectors')
    p.add_argument('group')
    p.add_argument('--dump', action='store_true',
                   help='emit the minimal vectors as a matrix')

    p = sub.add_parser('build-basis', parents=[common],
                       help='basis of minimal vectors')
    p.add_argument('group')
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--out', type=str, default='')
    p.add_argument('--restarts', type=int, default=None)
    p.add_argument('--steps', type=int, default=None,
                   help='swap steps per restart, as a multiple of n^2')
    p.add_argument('--no-fallback', action='store_true')

    p = sub.add_parser('verify', parents=[common],
                       help='check a basis matrix file')
    p.add_argument('matrix')
    p.add_argument('--group', type=str, default=None)

    p = sub.add_parser('covering-table', parents=[common],
                       help='covering radius bounds table')
    p.add_argument('--n', type=_int_list, default=None)
    p.add_argument('--format', choices=('text', 'csv', 'json'), default='text')

    p = sub.add_parser('covering-estimate', parents=[common],
                       help='deep hole estimate for one group')
    p.add_argument('group')
    p.add_argument('--samples', type=_positive_int, default=None)
    p.add_argument('--seed', type=int, default=None)

    p = sub.add_parser('aut-verify', parents=[common],
                       help='Aut(G) against the coordinate stabilizer of L(G)')
    p.add_argument('group')
    p.add_argument('--cap', type=int, default=None,
                   help='largest n for the stabilizer search')
    return parser


def _text_lines(pairs):
    return '\n'.join('{}: {}'.format(k, v) for k, v in pairs) + '\n'


def cmd_group_info(args, cfg):
    G = parse_group(args.group)
    data = {
        'group': G.spec,
        'moduli': list(G.moduli),
        'order': G.order,
        'n': G.n,
        'exponent': G.exponent,
        'elements': [list(g) for g in G.nonzero],
    }
    if args.json:
        return data
    lines = [('group', G.spec), ('moduli', ' '.join(map(str, G.moduli))),
             ('order', G.order), ('n', G.n), ('exponent', G.exponent)]
    out = _text_lines(lines)
    for i, g in enumerate(G.nonzero, 1):
        out += 'g_{} = ({})\n'.format(i, ','.join(map(str, g)))
    return out


def cmd_basis(args, cfg):
    G = parse_group(args.group)
    basis = canonical_basis(G)
    det = basis.gram_det()
    if args.json:
        return {'group': G.spec, 'matrix': basis.matrix.to_lists(),
                'gram_det': det, 'holds': det == G.order ** 3}
    return basis.to_text()


def cmd_minvec(args, cfg):
    G = parse_group(args.group)
    report = minimum_distance(G)
    if args.json:
        data = {'group': G.spec, 'd_squared': report.d_squared,
                'count': report.count, 'rank': report.rank,
                'well_rounded': report.well_rounded}
        if args.dump:
            data['vectors'] = [list(v) for v in report.vectors]
        return data
    out = _text_lines([('group', G.spec), ('d_squared', report.d_squared),
                       ('count', report.count), ('rank', report.rank),
                       ('well_rounded', _flag(report.well_rounded))])
    if args.dump:
        out += IntMatrix(report.vectors).to_text()
    return out


def cmd_build_basis(args, cfg):
    G = parse_group(args.group)
    seed = cfg.SEED if args.seed is None else args.seed
    result = build_minimal_basis(
        G, seed=seed,
        allow_fallback=cfg.BASIS.ALLOW_FALLBACK and not args.no_fallback,
        restarts=cfg.BASIS.FALLBACK_RESTARTS if args.restarts is None
        else args.restarts,
        step_factor=cfg.BASIS.FALLBACK_STEP_FACTOR if args.steps is None
        else args.steps)
    basis, trace = result.basis, result.trace
    if args.out:
        try:
            with open(args.out, 'w') as f:
                f.write(basis.to_text())
        except IOError as e:
            raise LatticeError('cannot write {}: {}'.format(
                args.out, e.strerror), code='bad_argument')
        logging.info('=> basis written to {}'.format(args.out))
    if args.json:
        data = {'group': G.spec, 'gram_det': basis.gram_det(),
                'trace': trace.to_dict()}
        if not args.out:
            data['matrix'] = basis.matrix.to_lists()
        return data
    out = '' if args.out else basis.to_text()
    return out + dump_json(trace.to_dict()) + '\n'


def cmd_verify(args, cfg):
    try:
        with open(args.matrix) as f:
            text = f.read()
    except IOError as e:
        raise LatticeError('cannot read {}: {}'.format(args.matrix, e.strerror),
                           code='bad_argument')
    group = parse_group(args.group) if args.group else None
    G, matrix = parse_basis_text(text, group)
    if matrix.cols != G.n:
        raise MatrixFormatError('{} columns do not fit {} (n = {})'.format(
            matrix.cols, G.spec, G.n))
    basis = LatticeBasis(G, matrix)
    columns = basis.columns()
    members = [membership(G, c) for c in columns]
    norms = [norm_sq(c) for c in columns]
    det = basis.gram_det()
    is_basis = all(members) and det == G.order ** 3
    data = {'group': G.spec, 'members': all(members), 'norms_sq': norms,
            'gram_det': det, 'expected': G.order ** 3, 'is_basis': is_basis,
            'equal_norms': len(set(norms)) == 1}
    if args.json:
        out = data
    else:
        out = _text_lines([
            ('group', G.spec), ('members', _flag(data['members'])),
            ('norms_sq', ' '.join(map(str, norms))),
            ('gram_det', det), ('expected', data['expected']),
            ('is_basis', _flag(is_basis))])
    return out, (0 if is_basis else 1)


def _table_frame(reports, digits, mode):
    rows = []
    for r in reports:
        rows.append({
            'n': r.n,
            'mu_An': format_fixed(r.mu_An, digits, mode),
            'barnes': format_fixed(r.barnes, digits, mode),
            'sha': format_fixed(r.sha, digits, mode),
            'recursive': format_fixed(r.recursive, digits, mode),
        })
    return pd.DataFrame(rows, columns=['n', 'mu_An', 'barnes', 'sha',
                                       'recursive'])


def cmd_covering_table(args, cfg):
    ns = args.n if args.n else list(cfg.COVERING.TABLE_N)
    bad = [n for n in ns if n < 2]
    if bad:
        raise LatticeError('table rows need n >= 2, got {}'.format(bad),
                           code='bad_argument')
    reports = bounds_table(ns, recursive_cap=cfg.COVERING.RECURSIVE_CAP)
    if args.json or args.format == 'json':
        return {'rows': [r.to_dict() for r in reports]}
    frame = _table_frame(reports, cfg.COVERING.DIGITS, cfg.COVERING.ROUNDING)
    if args.format == 'csv':
        buf = io.StringIO()
        frame.to_csv(buf, index=False, lineterminator='\n')
        return buf.getvalue()
    return frame.to_string(index=False) + '\n'


def cmd_covering_estimate(args, cfg):
    G = parse_group(args.group)
    samples = cfg.COVERING.SAMPLES if args.samples is None else args.samples
    seed = cfg.SEED if args.seed is None else args.seed
    report = covering_report(G, samples=samples, seed=seed,
                             top_k=cfg.COVERING.ASCENT_TOP_K,
                             iters=cfg.COVERING.ASCENT_ITERS,
                             initial_step=cfg.COVERING.INITIAL_STEP,
                             chunk=cfg.COVERING.CHUNK)
    data = report.to_dict()
    data.update({'samples': samples, 'seed': seed})
    if args.json:
        return data
    digits, mode = cfg.COVERING.DIGITS, cfg.COVERING.ROUNDING
    return _text_lines([
        ('group', G.spec), ('n', G.n), ('samples', samples), ('seed', seed),
        ('deep_hole_estimate', format_fixed(report.deep_hole_estimate, 6, mode)),
        ('known', format_fixed(report.known, 6, mode)),
        ('lower_bound', format_fixed(report.lower_bound, 6, mode)),
        ('mu_An', format_fixed(report.mu_An, digits, mode)),
        ('barnes', format_fixed(report.barnes, digits, mode)),
        ('sha', format_fixed(report.sha, digits, mode)),
        ('recursive_sq', fraction_text(report.recursive_sq)),
        ('recursive', format_fixed(report.recursive, digits, mode))])


def cmd_aut_verify(args, cfg):
    G = parse_group(args.group)
    cap = cfg.AUT.STABILIZER_CAP if args.cap is None else args.cap
    result = verify_automorphism_correspondence(
        G, group_cap=cfg.AUT.GROUP_CAP, stabilizer_cap=cap)
    data = {'group': G.spec, 'equal': result.equal, 'order': result.order,
            'generators': [list(g) for g in result.generators]}
    if args.json:
        return data
    gens = ' '.join('({})'.format(','.join(map(str, g)))
                    for g in result.generators)
    return _text_lines([('group', G.spec), ('equal', _flag(result.equal)),
                        ('order', result.order), ('generators', gens or '-')])


COMMANDS = {
    'group-info': cmd_group_info,
    'basis': cmd_basis,
    'minvec': cmd_minvec,
    'build-basis': cmd_build_basis,
    'verify': cmd_verify,
    'covering-table': cmd_covering_table,
    'covering-estimate': cmd_covering_estimate,
    'aut-verify': cmd_aut_verify,
}


def _fail(args, stdout, stderr, code, message, status):
    if args.json:
        stdout.write(dump_json({'error': {'code': code,
                                          'message': message}}) + '\n')
    else:
        stderr.write('error [{}]: {}\n'.format(code, message))
    return status


def _emit(out, stdout, as_json):
    if as_json and not isinstance(out, str):
        stdout.write(dump_json(out) + '\n')
    else:
        stdout.write(out)


def dispatch(argv=None, stdout=None, stderr=None):
    """Run one subcommand; returns the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError('{}\nmissing subcommand (one of {})'.format(
                parser.format_usage().strip(), ', '.join(SUBCOMMANDS)))
    except UsageError as e:
        stderr.write('{}\n'.format(e))
        return 2

    cfg = config.clone()
    try:
        update_config(cfg, args)
    except (IOError, KeyError, ValueError, AssertionError) as e:
        # a bad --cfg file or --opts override is a usage error
        if not args.json:
            stderr.write('{}\n'.format(parser.format_usage().strip()))
        message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        return _fail(args, stdout, stderr, 'bad_config', message, 2)
    create_logger(cfg, args.command)
    logging.debug(pprint.pformat(vars(args)))

    try:
        out = COMMANDS[args.command](args, cfg)
    except LatticeError as e:
        return _fail(args, stdout, stderr, e.code, e.message, 1)
    except ValueError as e:
        return _fail(args, stdout, stderr, 'bad_argument', str(e), 1)

    status = 0
    if isinstance(out, tuple):
        out, status = out
    _emit(out, stdout, args.json)
    return status


def main():
    sys.exit(dispatch())


if __name__ == '__main__':
    main()
