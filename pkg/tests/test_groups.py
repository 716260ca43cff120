import itertools

import pytest

from groups import FiniteAbelianGroup
from groups import abelian_groups
from groups import element_ops
from groups import enumerate_elements
from groups import groups_up_to
from groups import parse_group
from utils.errors import GroupSpecError


@pytest.mark.parametrize('spec, moduli, order', [
    ('Z4', (4,), 4),
    ('Z4xZ2', (2, 4), 8),
    ('2,4', (2, 4), 8),
    ('z3X z3', (3, 3), 9),
    ('Z2×Z2×Z2', (2, 2, 2), 8),
    ('6', (6,), 6),
])
def test_parse_group(spec, moduli, order):
    G = parse_group(spec)
    assert G.moduli == moduli
    assert G.order == order
    assert G.n == order - 1


@pytest.mark.parametrize('spec', ['Z1', 'Z2xZ1', '', 'Zfoo', '2,,3', 'Z-3'])
def test_parse_group_rejects(spec):
    with pytest.raises(GroupSpecError) as info:
        parse_group(spec)
    assert info.value.code == 'bad_group_spec'


def test_parse_group_round_trips_spec(groups16):
    for G in groups16:
        assert parse_group(G.spec) == G
        assert parse_group(G.spec).spec == G.spec


def test_coprime_factors_are_kept():
    assert parse_group('Z2xZ3').moduli == (2, 3)
    assert parse_group('Z2xZ3') != parse_group('Z6')


def test_enumerate_elements_z3_and_z4():
    assert enumerate_elements(parse_group('Z3')) == [(0,), (1,), (2,)]
    assert parse_group('Z4').nonzero == ((1,), (2,), (3,))


def test_enumerate_elements_lex_order():
    G = parse_group('Z2xZ2')
    assert enumerate_elements(G) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_elements_are_distinct_and_zero_first(groups16):
    for G in groups16:
        elements = enumerate_elements(G)
        assert len(elements) == G.order
        assert len(set(elements)) == G.order
        assert elements[0] == G.zero
        assert elements == sorted(elements)


def test_index_and_coordinate():
    G = parse_group('Z2xZ4')
    assert G.index((0, 0)) == 0
    assert G.index((1, 3)) == 7
    assert G.coordinate((0, 1)) == 0
    assert G.coordinate((1, 3)) == 6
    with pytest.raises(ValueError):
        G.coordinate((0, 0))
    with pytest.raises(ValueError):
        G.index((2, 0))


@pytest.mark.parametrize('spec, a, b, total, order_a', [
    ('Z4', (1,), (3,), (0,), 4),
    ('Z2xZ4', (1, 2), (1, 3), (0, 1), 2),
    ('Z6', (2,), (5,), (1,), 3),
    ('Z3xZ3', (0, 0), (1, 2), (1, 2), 1),
])
def test_element_ops(spec, a, b, total, order_a):
    G = parse_group(spec)
    ops = element_ops(G, a, b)
    assert ops.sum == total
    assert ops.order_a == order_a
    assert G.add(a, ops.neg_a) == G.zero


def test_element_orders_divide_group_order(groups16):
    for G in groups16:
        for a in G.elements:
            k = G.order_of(a)
            assert G.order % k == 0
            assert G.scale(k, a) == G.zero
            assert all(G.scale(j, a) != G.zero for j in range(1, k))


def test_exponent_and_generators():
    G = parse_group('Z2xZ4xZ4')
    assert G.exponent == 4
    assert G.rank == 3
    assert G.generators() == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert parse_group('Z4xZ6').exponent == 12


def test_weighted_sum_matches_direct_sum():
    G = parse_group('Z3xZ3')
    coeffs = [1, -2, 0, 3, 1, 0, 0, 5]
    expected = G.zero
    for c, g in zip(coeffs, G.nonzero):
        expected = G.add(expected, G.scale(c, g))
    assert G.weighted_sum(coeffs) == expected


def test_abelian_group_counts():
    counts = [len(abelian_groups(k)) for k in range(2, 17)]
    assert counts == [1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]
    assert len(groups_up_to(16)) == 24


def test_abelian_groups_are_invariant_factor_chains():
    for k in range(2, 33):
        seen = set()
        for G in abelian_groups(k):
            assert G.order == k
            for a, b in zip(G.moduli, G.moduli[1:]):
                assert b % a == 0
            seen.add(G.moduli)
        assert len(seen) == len(abelian_groups(k))


def test_abelian_groups_of_order_16():
    specs = [G.spec for G in abelian_groups(16)]
    assert sorted(specs) == sorted(
        ['Z2xZ2xZ2xZ2', 'Z2xZ2xZ4', 'Z2xZ8', 'Z4xZ4', 'Z16'])


def test_group_is_hashable():
    groups = {FiniteAbelianGroup([4, 2]), parse_group('Z2xZ4')}
    assert len(groups) == 1
    assert list(itertools.islice(iter(groups), 1))[0].spec == 'Z2xZ4'
