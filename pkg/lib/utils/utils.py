# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
import sys
import time
from decimal import ROUND_DOWN
from decimal import ROUND_HALF_UP
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

import json_tricks
import numpy as np


def create_logger(cfg, phase='run'):
    """
    Root logger in the usual '%(asctime)-15s %(message)s' format. The
    console handler writes to stderr so stdout carries only results; with
    cfg.OUTPUT_DIR set, a <phase>_<time>.log file is written there too.
    """
    head = '%(asctime)-15s %(message)s'
    logger = logging.getLogger()
    logger.setLevel(logging.INFO)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(logging.Formatter(head))
    logger.addHandler(console)

    final_output_dir = None
    if cfg.OUTPUT_DIR:
        final_output_dir = Path(cfg.OUTPUT_DIR)
        if not final_output_dir.exists():
            print('=> creating {}'.format(final_output_dir), file=sys.stderr)
            final_output_dir.mkdir(parents=True, exist_ok=True)
        time_str = time.strftime('%Y-%m-%d-%H-%M')
        log_file = final_output_dir / '{}_{}.log'.format(phase, time_str)
        file_handler = logging.FileHandler(str(log_file))
        file_handler.setFormatter(logging.Formatter(head))
        logger.addHandler(file_handler)
        final_output_dir = str(final_output_dir)

    return logger, final_output_dir


def format_fixed(value, digits=4, mode='round'):
    """Fixed-point text with the given digits, rounded or truncated."""
    if value is None:
        return '-'
    if mode not in ('round', 'truncate'):
        raise ValueError("mode must be 'round' or 'truncate', got {!r}".format(mode))
    quantum = Decimal(1).scaleb(-digits)
    rounding = ROUND_HALF_UP if mode == 'round' else ROUND_DOWN
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=rounding))


def fraction_text(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def to_primitive(obj):
    """Plain JSON types: tuples become lists, Fractions become 'p/q'."""
    if isinstance(obj, dict):
        return {str(k): to_primitive(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_primitive(v) for v in obj]
    if isinstance(obj, Fraction):
        return fraction_text(obj)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def dump_json(obj):
    return json_tricks.dumps(to_primitive(obj), primitives=True,
                             sort_keys=True, indent=2)
