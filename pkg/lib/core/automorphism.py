# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

"""
Group automorphisms against lattice symmetries.

Permutations are 0-based tuples sigma over the lattice coordinates
0..n-1 (the nonzero elements in canonical order). An automorphism phi of G
induces sigma with phi(g_i) = g_sigma(i); a coordinate permutation acts on
X by X'_i = X_sigma(i), the balancing coordinate being recomputed.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
import logging
from collections import namedtuple
from math import gcd

from core.lattice import canonical_basis
from core.lattice import complete_vector
from core.lattice import membership
from utils.errors import CapExceededError


Correspondence = namedtuple('Correspondence', ['equal', 'order', 'generators'])


def compose(p, q):
    """(p o q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def invert(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def closure(generators, n):
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = compose(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


class PermutationSet(object):

    def __init__(self, n, perms):
        self.n = n
        self.perms = frozenset(tuple(p) for p in perms)
        for p in self.perms:
            if sorted(p) != list(range(n)):
                raise ValueError('{} is not a permutation of {} points'.format(
                    p, n))

    def __len__(self):
        return len(self.perms)

    def __contains__(self, p):
        return tuple(p) in self.perms

    def __iter__(self):
        return iter(self.sorted())

    def __eq__(self, other):
        return isinstance(other, PermutationSet) and self.n == other.n and \
            self.perms == other.perms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.perms))

    def sorted(self):
        return sorted(self.perms)

    @property
    def identity(self):
        return tuple(range(self.n))

    def is_group(self):
        if self.identity not in self.perms:
            return False
        for p in self.perms:
            if invert(p) not in self.perms:
                return False
            for q in self.perms:
                if compose(p, q) not in self.perms:
                    return False
        return True

    def generators(self):
        """Greedy generating set, scanning the permutations in sorted order."""
        gens = []
        span = {self.identity}
        for p in self.sorted():
            if p not in span:
                gens.append(p)
                span = closure(gens, self.n)
                if len(span) == len(self.perms):
                    break
        return gens

    def __repr__(self):
        return 'PermutationSet(n={}, order={})'.format(self.n, len(self))


def unit_count(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def enumerate_group_automorphisms(G, cap=32):
    """Aut(G) as permutations of the nonzero elements."""
    if G.order > cap:
        raise CapExceededError('|G| = {} exceeds the automorphism cap {}'.format(
            G.order, cap))
    choices = []
    for m in G.moduli:
        choices.append([a for a in G.elements if m % G.order_of(a) == 0])
    perms = []
    for images in itertools.product(*choices):
        def phi(x):
            acc = G.zero
            for coeff, a in zip(x, images):
                acc = G.add(acc, G.scale(coeff, a))
            return acc
        mapped = [phi(g) for g in G.nonzero]
        if G.zero in mapped or len(set(mapped)) != G.n:
            continue
        perms.append(tuple(G.coordinate(h) for h in mapped))
    logging.debug('=> |Aut({})| = {}'.format(G.spec, len(perms)))
    return PermutationSet(G.n, perms)


def permute_coordinates(x, sigma):
    n = len(sigma)
    return complete_vector([x[sigma[i]] for i in range(n)])


def permutation_preserves_lattice(G, sigma, vectors):
    return all(membership(G, permute_coordinates(v, sigma)) for v in vectors)


def lattice_coordinate_stabilizer(G, cap=10, basis=None):
    """
    All sigma in S_n mapping L(G) into itself. Only the basis vectors are
    tested; the image of a full-rank lattice under a permutation has the
    same volume, so containment is equality.

    The search assigns pi = sigma^-1 coordinate by coordinate, generators
    first, and checks each basis vector as soon as its support is placed.
    """
    if G.n > cap:
        raise CapExceededError('n = {} exceeds the stabilizer cap {}'.format(
            G.n, cap))
    if basis is None:
        basis = canonical_basis(G)
    n = G.n
    vectors = [c[:n] for c in basis.columns()]
    gen_coords = [G.coordinate(g) for g in G.generators()]
    order = gen_coords + [i for i in range(n) if i not in set(gen_coords)]
    position = {c: k for k, c in enumerate(order)}
    # vectors become checkable once the last coordinate of their support is set
    ready = [[] for _ in range(n)]
    for v in vectors:
        support = [i for i in range(n) if v[i]]
        last = max(position[i] for i in support) if support else 0
        ready[last].append(v)

    nonzero = G.nonzero
    found = []
    pi = [None] * n
    used = [False] * n

    def relation_holds(v):
        acc = G.zero
        for i in range(n):
            if v[i]:
                acc = G.add(acc, G.scale(v[i], nonzero[pi[i]]))
        return acc == G.zero

    def search(k):
        if k == n:
            found.append(invert(pi))
            return
        coord = order[k]
        for target in range(n):
            if used[target]:
                continue
            pi[coord] = target
            used[target] = True
            if all(relation_holds(v) for v in ready[k]):
                search(k + 1)
            used[target] = False
            pi[coord] = None

    search(0)
    stabilizer = PermutationSet(n, found)
    for sigma in stabilizer.sorted():
        if not permutation_preserves_lattice(G, sigma, basis.columns()):
            raise AssertionError('stabilizer element {} fails membership'.format(
                sigma))
    return stabilizer


def verify_automorphism_correspondence(G, group_cap=32, stabilizer_cap=10):
    """Aut(G) and the coordinate stabilizer of L(G) as sets of permutations."""
    aut = enumerate_group_automorphisms(G, cap=group_cap)
    stab = lattice_coordinate_stabilizer(G, cap=stabilizer_cap)
    equal = aut == stab
    logging.info('=> {}: |Aut(G)| = {}, |Stab| = {}, equal = {}'.format(
        G.spec, len(aut), len(stab), equal))
    return Correspondence(equal=equal, order=len(aut) if equal else None,
                          generators=aut.generators())
