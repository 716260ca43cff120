# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups: default configuration.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from yacs.config import CfgNode as CN


_C = CN()

_C.OUTPUT_DIR = ''
_C.SEED = 0
_C.PROGRESS = False

# minimal-vector basis construction
_C.BASIS = CN()
_C.BASIS.ALLOW_FALLBACK = True
_C.BASIS.FALLBACK_RESTARTS = 64
# swap steps per restart = FALLBACK_STEP_FACTOR * n * n
_C.BASIS.FALLBACK_STEP_FACTOR = 10

# covering radius bounds and estimates
_C.COVERING = CN()
_C.COVERING.RECURSIVE_CAP = 512
_C.COVERING.SAMPLES = 5000
_C.COVERING.ASCENT_TOP_K = 16
_C.COVERING.ASCENT_ITERS = 40
_C.COVERING.INITIAL_STEP = 0.5
_C.COVERING.CHUNK = 1024
_C.COVERING.DIGITS = 4
# 'round' or 'truncate'
_C.COVERING.ROUNDING = 'round'
_C.COVERING.TABLE_N = [3, 4, 5, 6, 20, 50, 100, 1000, 10000, 100000, 1000000]

# automorphism checks
_C.AUT = CN()
_C.AUT.GROUP_CAP = 32
_C.AUT.STABILIZER_CAP = 10

_C.LINALG = CN()
_C.LINALG.CAUCHY_BINET_MAX_ROWS = 16

# batch reproduction
_C.REPRODUCE = CN()
_C.REPRODUCE.MAX_ORDER = 16
_C.REPRODUCE.AUT_MAX_ORDER = 11
_C.REPRODUCE.GRAM_MAX_N = 64
_C.REPRODUCE.SHA_POINTS = 1000
_C.REPRODUCE.SHA_MAX_ORDER = 8
_C.REPRODUCE.ESTIMATE_GROUPS = ['Z2', 'Z3', 'Z4', 'Z2xZ2', 'Z5', 'Z6']


def update_config(cfg, args):
    cfg.defrost()

    if getattr(args, 'cfg', None):
        cfg.merge_from_file(args.cfg)
    if getattr(args, 'opts', None):
        cfg.merge_from_list(args.opts)

    cfg.freeze()


if __name__ == '__main__':
    import sys
    with open(sys.argv[1], 'w') as f:
        print(_C, file=f)
