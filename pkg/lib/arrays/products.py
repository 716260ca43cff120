# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging

from arrays.admissible import AdmissibleArray
from groups import FiniteAbelianGroup
from utils.errors import HypothesisError


ATTACH_BLOCK_DETS = {2: 2, 3: -3, 4: 4}


def product_layout(moduli_a, moduli_b):
    """Stable sort of the concatenated moduli: K coordinate t <- perm[t]."""
    concat = tuple(moduli_a) + tuple(moduli_b)
    return sorted(range(len(concat)), key=lambda i: concat[i])


class _Embedding(object):

    def __init__(self, A, B):
        self.perm = product_layout(A.moduli, B.moduli)
        concat = A.moduli + B.moduli
        self.group = FiniteAbelianGroup([concat[p] for p in self.perm])
        self._zero_a = A.zero
        self._zero_b = B.zero

    def __call__(self, a=None, b=None):
        a = self._zero_a if a is None else tuple(a)
        b = self._zero_b if b is None else tuple(b)
        joined = a + b
        return tuple(joined[p] for p in self.perm)


def _check_minimal_basis_array(arr, role):
    norms = set(arr.column_norms_sq())
    if norms != {4}:
        raise HypothesisError(
            '{} operand {} has column norms^2 {} (need minimum distance 2)'.format(
                role, arr.name, sorted(norms)))
    det = arr.det_M()
    if abs(det) != arr.group.order:
        raise HypothesisError('{} operand {} has det M = {} != +-{}'.format(
            role, arr.name, det, arr.group.order))


def combine_product(arrG, arrH, verify=True):
    """Block array for G x H from arrays of G and H."""
    _check_minimal_basis_array(arrG, 'left')
    _check_minimal_basis_array(arrH, 'right')
    G, H = arrG.group, arrH.group
    emb = _Embedding(G, H)
    labels = [emb(a=g) for g in arrG.labels] + \
        [emb(b=h) for h in arrH.labels] + \
        [emb(g, h) for g in arrG.labels for h in arrH.labels]

    columns = []
    for j in range(G.n):
        columns.append({emb(a=g): arrG.M[r, j]
                        for r, g in enumerate(arrG.labels) if arrG.M[r, j]})
    for j in range(H.n):
        columns.append({emb(b=h): arrH.M[r, j]
                        for r, h in enumerate(arrH.labels) if arrH.M[r, j]})
    for g in arrG.labels:
        for h in arrH.labels:
            columns.append({emb(g, h): 1, emb(a=g): -1, emb(b=h): -1})

    arr = AdmissibleArray.from_sparse(
        emb.group, labels, columns,
        name='({})x({})'.format(arrG.name, arrH.name))
    if verify:
        arr.verify('basis', norm_sq_expected=4)
    logging.debug('=> product array {}'.format(arr.name))
    return arr


def attach_block_det(m):
    return ATTACH_BLOCK_DETS[m]


def _reorder(arr, first, last=()):
    """Move the labels in first to the front and those in last to the end."""
    index = {l: i for i, l in enumerate(arr.labels)}
    pinned = set(first) | set(last)
    order = [index[l] for l in first] + \
        [i for i, l in enumerate(arr.labels) if l not in pinned] + \
        [index[l] for l in last]
    return arr.permute_rows(order)


def _attach_two(arr, emb):
    g = arr.labels
    labels = [emb(b=x) for x in g] + [emb(a=(1,))] + [emb((1,), x) for x in g]
    one = emb(a=(1,))
    columns = [{emb(b=x): arr.M[r, j] for r, x in enumerate(g) if arr.M[r, j]}
               for j in range(arr.n)]
    columns.append({emb(b=g[0]): -1, one: 1, emb((1,), g[0]): 1})
    columns.append({emb(b=g[0]): -1, one: -1, emb((1,), g[0]): 1})
    for x in g[1:]:
        columns.append({emb(b=x): -1, one: -1, emb((1,), x): 1})
    return labels, columns


def _attach_three(arr, emb):
    G = arr.group
    g1 = next((x for x in arr.labels if G.order_of(x) >= 4), None)
    if g1 is None:
        raise HypothesisError(
            'Z3 x {}: no element g with 2g outside {{0, g, -g}} '
            '(exponent {})'.format(G.spec, G.exponent))
    g2, g3 = G.neg(g1), G.scale(2, g1)
    arr = _reorder(arr, [g1, g2, g3])
    g = arr.labels
    one, two = (1,), (2,)
    labels = [emb(b=x) for x in g] + \
        [emb(a=one), emb(one, g1), emb(two, g1)] + \
        [emb(one, x) for x in g[1:]] + \
        [emb(a=two)] + [emb(two, x) for x in g[1:]]
    columns = [{emb(b=x): arr.M[r, j] for r, x in enumerate(g) if arr.M[r, j]}
               for j in range(arr.n)]
    columns.append({emb(a=one): 1, emb(one, g1): 1, emb(two, g1): -1})
    columns.append({emb(b=g3): -1, emb(one, g1): 1, emb(two, g1): 1})
    columns.append({emb(b=g1): -1, emb(a=one): -1, emb(one, g1): 1})
    for x in g[1:]:
        columns.append({emb(b=x): -1, emb(a=one): -1, emb(one, x): 1})
    columns.append({emb(b=g2): -1, emb(two, g1): -1, emb(a=two): 1})
    for x in g[1:]:
        columns.append({emb(two, g1): -1, emb(two, x): 1,
                        emb(b=G.add(x, G.neg(g1))): -1})
    return labels, columns


def _attach_four(arr, emb):
    G = arr.group
    g1 = next((x for x in arr.labels if G.order_of(x) > 2), None)
    if g1 is None:
        raise HypothesisError(
            'Z4 x {}: every element is its own inverse'.format(G.spec))
    gn = G.neg(g1)
    arr = _reorder(arr, [g1], [gn])
    g = arr.labels
    residues = [(1,), (2,), (3,)]
    labels = [emb(b=x) for x in g] + [emb(a=a) for a in residues] + \
        [emb(a, x) for x in g for a in residues]
    e1, e2, e3 = [emb(a=a) for a in residues]
    columns = [{emb(b=x): arr.M[r, j] for r, x in enumerate(g) if arr.M[r, j]}
               for j in range(arr.n)]
    columns.append({e1: 1, e2: 1, e3: -1})
    columns.append({e1: -1, e2: 1, e3: 1})
    columns.append({emb(b=g1): -1, emb(b=gn): -1, e1: 1, e3: 1})
    for x in g:
        for a in residues:
            columns.append({emb(b=x): -1, emb(a=a): -1, emb(a, x): 1})
    return labels, columns


def attach_small(m, arrG, verify=True):
    """Array for Z_m x G, m in {2, 3, 4}, from a minimal-basis array of G."""
    if m not in ATTACH_BLOCK_DETS:
        raise ValueError('attach_small needs m in {{2, 3, 4}}, got {}'.format(m))
    _check_minimal_basis_array(arrG, 'attached')
    if arrG.n < 3:
        raise HypothesisError('attaching Z{} needs |G| >= 4, got {}'.format(
            m, arrG.group.spec))
    Zm = FiniteAbelianGroup([m])
    emb = _Embedding(Zm, arrG.group)
    build = {2: _attach_two, 3: _attach_three, 4: _attach_four}[m]
    labels, columns = build(arrG, emb)
    arr = AdmissibleArray.from_sparse(
        emb.group, labels, columns, name='Z{}x({})'.format(m, arrG.name))
    if verify:
        arr.verify('basis', norm_sq_expected=4)
    logging.debug('=> attached Z{} to {}'.format(m, arrG.name))
    return arr
