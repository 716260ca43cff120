# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""
Assembly of a basis of minimal vectors for L(G), G != Z4.

The cyclic factors are split into blocks: every Z_m with m >= 5 is a
Toeplitz block, pairs Z4xZ4, Z3xZ3, Z2xZ4 and Z2xZ2 use the tabulated
arrays, and a leftover Z2+Z3 or Z3+Z4 is merged into Z6 or Z12. Blocks are
multiplied largest first (ties by spec string); at most one Z2, Z3 or Z4
is left over and gets attached last.

Each block coordinate carries a slot telling which factors of G it stands
for, so the final labels can be carried back to G: a direct slot copies a
residue, a merged slot splits a Z6/Z12 residue by reduction (CRT).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
from collections import namedtuple

from arrays.admissible import BuildTrace
from arrays.cyclic import cyclic_minimal_array
from arrays.fallback import fallback_greedy_basis
from arrays.printed import small_group_array
from arrays.printed import special_array
from arrays.products import attach_small
from arrays.products import combine_product
from arrays.products import product_layout
from groups import FiniteAbelianGroup
from utils.errors import HypothesisError
from utils.errors import NotWellRoundedError


Block = namedtuple('Block', ['kind', 'moduli', 'slots'])
BuildResult = namedtuple('BuildResult', ['basis', 'trace'])


def _block_order(block):
    order = 1
    for m in block.moduli:
        order *= m
    return order


def _block_spec(block):
    return FiniteAbelianGroup(block.moduli).spec


def expected_min_norm_sq(G):
    if G.moduli == (2,):
        return 8
    if G.moduli == (3,):
        return 6
    return 4


def plan_blocks(G):
    """(blocks, single): the block partition and the leftover (m, index)."""
    small = {2: [], 3: [], 4: []}
    blocks = []
    for i, m in enumerate(G.moduli):
        if m >= 5:
            blocks.append(Block('cyclic', (m,), [('direct', i)]))
        else:
            small[m].append(i)

    while len(small[4]) >= 2:
        a, b = small[4].pop(0), small[4].pop(0)
        blocks.append(Block('special', (4, 4), [('direct', a), ('direct', b)]))
    while len(small[3]) >= 2:
        a, b = small[3].pop(0), small[3].pop(0)
        blocks.append(Block('special', (3, 3), [('direct', a), ('direct', b)]))
    if small[4] and small[2]:
        b, a = small[4].pop(0), small[2].pop(0)
        blocks.append(Block('special', (2, 4), [('direct', a), ('direct', b)]))
    if small[3] and small[2]:
        a, b = small[2].pop(0), small[3].pop(0)
        blocks.append(Block('merged', (6,), [('crt', (a, b))]))
    elif small[3] and small[4]:
        a, b = small[3].pop(0), small[4].pop(0)
        blocks.append(Block('merged', (12,), [('crt', (a, b))]))
    while len(small[2]) >= 2:
        a, b = small[2].pop(0), small[2].pop(0)
        blocks.append(Block('small', (2, 2), [('direct', a), ('direct', b)]))

    leftovers = [(m, i) for m in (2, 3, 4) for i in small[m]]
    assert len(leftovers) <= 1, leftovers
    blocks.sort(key=lambda b: (-_block_order(b), _block_spec(b)))
    return blocks, (leftovers[0] if leftovers else None)


def _block_array(block):
    if block.kind in ('cyclic', 'merged'):
        return cyclic_minimal_array(block.moduli[0], verify=False)
    if block.kind == 'special':
        return special_array(FiniteAbelianGroup(block.moduli), verify=False)
    return small_group_array(FiniteAbelianGroup(block.moduli), verify=False)


def _element_map(G, slots):
    def mapping(label):
        out = [0] * G.rank
        for residue, (kind, where) in zip(label, slots):
            if kind == 'direct':
                out[where] = residue
            else:
                for i in where:
                    out[i] = residue % G.moduli[i]
        return tuple(out)
    return mapping


def _assemble(G, trace):
    blocks, single = plan_blocks(G)
    if not blocks:
        m, i = single
        if m == 4:
            raise NotWellRoundedError(
                'L(Z4) is not well-rounded: no basis of minimal vectors exists')
        trace.add('small', G.spec)
        return small_group_array(G, verify=False), [('direct', i)]

    arr, slots = None, None
    for block in blocks:
        if block.kind == 'merged':
            parts = [G.moduli[i] for i in block.slots[0][1]]
            trace.add('merge', 'x'.join('Z{}'.format(p) for p in parts),
                      _block_spec(block))
        trace.add(block.kind, _block_spec(block))
        block_arr = _block_array(block)
        if arr is None:
            arr, slots = block_arr, list(block.slots)
            continue
        perm = product_layout(arr.group.moduli, block_arr.group.moduli)
        joined = slots + list(block.slots)
        trace.add('product', arr.group.spec, block_arr.group.spec)
        arr = combine_product(arr, block_arr, verify=False)
        slots = [joined[p] for p in perm]

    if single is not None:
        m, i = single
        perm = product_layout((m,), arr.group.moduli)
        joined = [('direct', i)] + slots
        trace.add('attach', 'Z{}'.format(m), arr.group.spec)
        arr = attach_small(m, arr, verify=False)
        slots = [joined[p] for p in perm]
    return arr, slots


def build_minimal_basis(G, seed=0, allow_fallback=True, restarts=64,
                        step_factor=10):
    trace = BuildTrace(seed=seed)
    if G.moduli == (4,):
        raise NotWellRoundedError(
            'L(Z4) is not well-rounded: no basis of minimal vectors exists')
    try:
        arr, slots = _assemble(G, trace)
        basis = arr.relabel(G, _element_map(G, slots)).to_basis()
    except HypothesisError as e:
        if not allow_fallback:
            raise
        logging.info('=> {}: {}; switching to the randomised search'.format(
            G.spec, e))
        trace.fallback_used = True
        trace.add('fallback', G.spec)
        basis = fallback_greedy_basis(G, seed=seed, restarts=restarts,
                                      step_factor=step_factor)
    basis.validate(norm_sq_expected=expected_min_norm_sq(G))
    logging.info('=> basis of minimal vectors for {} ({} steps{})'.format(
        G.spec, len(trace), ', fallback' if trace.fallback_used else ''))
    return BuildResult(basis=basis, trace=trace)
