import itertools
import random

import pytest

from core.automorphism import PermutationSet
from core.automorphism import closure
from core.automorphism import compose
from core.automorphism import enumerate_group_automorphisms
from core.automorphism import invert
from core.automorphism import lattice_coordinate_stabilizer
from core.automorphism import permutation_preserves_lattice
from core.automorphism import unit_count
from core.automorphism import verify_automorphism_correspondence
from core.lattice import canonical_basis
from groups import FiniteAbelianGroup
from groups import groups_up_to
from groups import parse_group
from utils.errors import CapExceededError


def test_compose_and_invert():
    p = (1, 2, 0)
    q = (0, 2, 1)
    assert compose(p, q) == (1, 0, 2)
    assert compose(p, invert(p)) == (0, 1, 2)
    assert len(closure([p], 3)) == 3
    assert len(closure([p, q], 3)) == 6


def test_permutation_set_validation():
    with pytest.raises(ValueError):
        PermutationSet(3, [(0, 0, 1)])
    S = PermutationSet(3, [(0, 1, 2), (1, 2, 0), (2, 0, 1)])
    assert S.is_group()
    assert (1, 2, 0) in S
    assert not PermutationSet(3, [(0, 1, 2), (1, 2, 0)]).is_group()
    assert not PermutationSet(2, [(1, 0)]).is_group()


@pytest.mark.parametrize('spec, order', [
    ('Z2', 1), ('Z3', 2), ('Z4', 2), ('Z5', 4), ('Z2xZ2', 6),
    ('Z2xZ4', 8), ('Z3xZ3', 48), ('Z2xZ2xZ2', 168),
])
def test_group_automorphism_counts(spec, order):
    aut = enumerate_group_automorphisms(parse_group(spec))
    assert len(aut) == order
    assert aut.is_group()


def test_z2_has_only_the_identity():
    aut = enumerate_group_automorphisms(parse_group('Z2'))
    assert aut.sorted() == [(0,)]
    assert lattice_coordinate_stabilizer(parse_group('Z2')).sorted() == [(0,)]


def test_cyclic_automorphisms_match_unit_count():
    for m in range(2, 12):
        aut = enumerate_group_automorphisms(FiniteAbelianGroup([m]))
        assert len(aut) == unit_count(m)
    assert [unit_count(m) for m in (7, 8, 9, 10, 11, 12)] == [6, 4, 6, 4, 10, 4]


@pytest.mark.parametrize('spec, perms', [
    ('Z3', [(0, 1), (1, 0)]),
    ('Z4', [(0, 1, 2), (2, 1, 0)]),
])
def test_stabilizer_examples(spec, perms):
    stab = lattice_coordinate_stabilizer(parse_group(spec))
    assert stab.sorted() == perms
    assert stab.is_group()


def test_stabilizer_agrees_with_membership_on_all_of_sn():
    for spec in ('Z4', 'Z2xZ2', 'Z5'):
        G = parse_group(spec)
        basis = canonical_basis(G)
        stab = lattice_coordinate_stabilizer(G)
        for sigma in itertools.permutations(range(G.n)):
            preserves = permutation_preserves_lattice(G, sigma, basis.columns())
            assert preserves == (sigma in stab), (spec, sigma)


def test_stabilizer_preserves_random_lattice_vectors():
    rng = random.Random(8)
    G = parse_group('Z2xZ4')
    basis = canonical_basis(G)
    cols = basis.columns()
    vectors = []
    for _ in range(30):
        coeffs = [rng.randint(-3, 3) for _ in cols]
        vectors.append([sum(c * col[i] for c, col in zip(coeffs, cols))
                        for i in range(G.n + 1)])
    for sigma in lattice_coordinate_stabilizer(G):
        assert permutation_preserves_lattice(G, sigma, vectors)


@pytest.mark.parametrize('spec, order', [('Z2xZ2', 6), ('Z7', 6), ('Z2xZ4', 8)])
def test_correspondence_examples(spec, order):
    result = verify_automorphism_correspondence(parse_group(spec))
    assert result.equal
    assert result.order == order
    generated = closure(result.generators, parse_group(spec).n)
    assert len(generated) == order


def test_correspondence_up_to_order_11():
    for G in groups_up_to(11):
        result = verify_automorphism_correspondence(G)
        assert result.equal, G.spec
        if G.rank == 1:
            assert result.order == unit_count(G.order)


def test_generators_span_the_group():
    aut = enumerate_group_automorphisms(parse_group('Z2xZ2xZ2'))
    gens = aut.generators()
    assert closure(gens, 7) == set(aut.perms)


def test_caps():
    with pytest.raises(CapExceededError):
        enumerate_group_automorphisms(parse_group('Z3xZ3'), cap=8)
    with pytest.raises(CapExceededError):
        lattice_coordinate_stabilizer(parse_group('Z13'))
    with pytest.raises(CapExceededError):
        verify_automorphism_correspondence(parse_group('Z3xZ3'),
                                           stabilizer_cap=7)
