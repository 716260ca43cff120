# ------------------------------------------------------------------------------
# Lattices of finite Abelian groups.
# Licensed under the MIT License.
# ------------------------------------------------------------------------------

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
import re
from collections import namedtuple
from functools import reduce
from math import gcd

from utils.errors import GroupSpecError


_TOKEN = re.compile(r'^[Zz]?(\d+)$')
_SEPARATOR = re.compile(r'[xX×]')

ElementOps = namedtuple('ElementOps', ['sum', 'neg_a', 'order_a'])


def _lcm(a, b):
    return a * b // gcd(a, b)


class FiniteAbelianGroup(object):
    """
    G = Z_{m1} x ... x Z_{mk} with ascending moduli.

    Elements are residue tuples. Index 0 is the zero element, the nonzero
    elements follow in lexicographic order; the nonzero list is the column
    of group labels the lattice coordinates are weighted by.
    """

    def __init__(self, moduli):
        moduli = tuple(sorted(int(m) for m in moduli))
        if not moduli:
            raise GroupSpecError('a group needs at least one cyclic factor')
        for m in moduli:
            if m < 2:
                raise GroupSpecError(
                    'modulus {} < 2: trivial factors are not allowed'.format(m))
        self.moduli = moduli
        self.order = reduce(lambda a, b: a * b, moduli, 1)
        self.n = self.order - 1
        self._elements = None
        self._index = None

    @property
    def rank(self):
        return len(self.moduli)

    @property
    def exponent(self):
        return reduce(_lcm, self.moduli, 1)

    @property
    def spec(self):
        return 'x'.join('Z{}'.format(m) for m in self.moduli)

    @property
    def zero(self):
        return (0,) * len(self.moduli)

    @property
    def elements(self):
        if self._elements is None:
            self._elements = tuple(itertools.product(
                *[range(m) for m in self.moduli]))
            self._index = {e: i for i, e in enumerate(self._elements)}
        return self._elements

    @property
    def nonzero(self):
        return self.elements[1:]

    def index(self, element):
        """Position of element in the canonical order (zero is 0)."""
        self.elements
        try:
            return self._index[tuple(element)]
        except KeyError:
            raise ValueError('{} is not an element of {}'.format(
                element, self.spec))

    def coordinate(self, element):
        """Lattice coordinate (0-based) of a nonzero element."""
        i = self.index(element)
        if i == 0:
            raise ValueError('the zero element has no lattice coordinate')
        return i - 1

    def generators(self):
        gens = []
        for i in range(len(self.moduli)):
            e = [0] * len(self.moduli)
            e[i] = 1
            gens.append(tuple(e))
        return gens

    def reduce(self, residues):
        if len(residues) != len(self.moduli):
            raise ValueError('expected {} residues, got {}'.format(
                len(self.moduli), len(residues)))
        return tuple(int(r) % m for r, m in zip(residues, self.moduli))

    def add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a):
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def scale(self, k, a):
        return tuple((k * x) % m for x, m in zip(a, self.moduli))

    def order_of(self, a):
        return reduce(_lcm, (m // gcd(x, m) for x, m in zip(a, self.moduli)), 1)

    def weighted_sum(self, coeffs):
        """Sum of c_i * g_i over the nonzero elements g_i."""
        acc = [0] * len(self.moduli)
        for c, g in zip(coeffs, self.nonzero):
            if c:
                for t, r in enumerate(g):
                    acc[t] += c * r
        return tuple(a % m for a, m in zip(acc, self.moduli))

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and \
            self.moduli == other.moduli

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.moduli)

    def __repr__(self):
        return 'FiniteAbelianGroup({})'.format(self.spec)

    def __str__(self):
        return self.spec


def parse_group(spec):
    """Parse "Z2xZ4" (case-insensitive) or "2,4"."""
    if isinstance(spec, FiniteAbelianGroup):
        return spec
    text = str(spec).strip()
    if not text:
        raise GroupSpecError('empty group spec')
    tokens = text.split(',') if ',' in text else _SEPARATOR.split(text)
    moduli = []
    for tok in tokens:
        match = _TOKEN.match(tok.strip())
        if match is None:
            raise GroupSpecError('malformed group factor {!r} in {!r}'.format(
                tok, text))
        moduli.append(int(match.group(1)))
    return FiniteAbelianGroup(moduli)


def enumerate_elements(G):
    return list(G.elements)


def element_ops(G, a, b):
    a = G.reduce(a)
    b = G.reduce(b)
    return ElementOps(sum=G.add(a, b), neg_a=G.neg(a), order_a=G.order_of(a))


def _invariant_chains(remaining, prev):
    if remaining == 1:
        yield ()
        return
    for d in range(max(prev, 2), remaining + 1):
        if remaining % d or d % prev:
            continue
        for rest in _invariant_chains(remaining // d, d):
            yield (d,) + rest


def abelian_groups(order):
    """All Abelian groups of the given order, as invariant factor chains."""
    if order < 2:
        return []
    return [FiniteAbelianGroup(chain) for chain in _invariant_chains(order, 1)]


def groups_up_to(max_order, min_order=2):
    groups = []
    for order in range(min_order, max_order + 1):
        groups.extend(abelian_groups(order))
    return groups
