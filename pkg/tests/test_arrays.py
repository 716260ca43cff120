import pytest

from arrays import AdmissibleArray
from arrays import BuildTrace
from arrays import attach_small
from arrays import combine_product
from arrays import cyclic_minimal_array
from arrays import small_group_array
from arrays import special_array
from arrays import wellrounded_array
from arrays.cyclic import bidiagonal_u
from arrays.cyclic import toeplitz_t
from arrays.cyclic import toeplitz_t_ext
from arrays.products import attach_block_det
from arrays.products import product_layout
from core.exact_linalg import IntMatrix
from core.exact_linalg import bareiss_det
from core.exact_linalg import gram
from groups import parse_group
from utils.errors import HypothesisError
from utils.errors import VerificationError


def test_m5_first_column():
    arr = cyclic_minimal_array(5)
    assert arr.M.column(0) == (-1, -1, 1, 0)
    assert arr.labels == ((1,), (2,), (3,), (4,))
    assert arr.det_M() == 5


def test_m7_is_tetradiagonal_toeplitz():
    M = cyclic_minimal_array(7).M
    band = {-1: 1, 0: -1, 1: -1, 2: 1}
    for j in range(5):
        expected = tuple(band.get(i - j, 0) for i in range(6))
        assert M.column(j) == expected
    assert M.column(0) == (-1, -1, 1, 0, 0, 0)
    assert bareiss_det(M) == 7


def test_m6_gram_det():
    arr = cyclic_minimal_array(6)
    assert arr.gram_det() == 216
    assert arr.det_M() == -6


def test_cyclic_array_determinants():
    for m in range(5, 51):
        M = toeplitz_t(m) @ bidiagonal_u(m)
        arr = cyclic_minimal_array(m, verify=False)
        assert arr.M == M
        assert arr.det_M() == (-1) ** (m - 1) * m


def test_cyclic_array_columns_are_minimal():
    for m in (5, 8, 13):
        arr = cyclic_minimal_array(m)
        assert set(arr.column_norms_sq()) == {4}
        assert arr.is_admissible()


def test_cyclic_array_needs_m5():
    with pytest.raises(ValueError):
        cyclic_minimal_array(4)


def test_toeplitz_ext_gram_det():
    for m in range(3, 12):
        assert bareiss_det(gram(toeplitz_t_ext(m))) == m ** 3


def test_small_group_arrays():
    z3 = small_group_array(parse_group('Z3'))
    assert z3.M_ext.columns() == [(-2, 1, 1), (1, -2, 1)]
    assert z3.gram_det() == 27
    assert small_group_array(parse_group('Z2xZ2')).det_M() == 4
    assert small_group_array(parse_group('Z2')).column_norms_sq() == [8]
    with pytest.raises(HypothesisError):
        small_group_array(parse_group('Z5'))


@pytest.mark.parametrize('spec, det_M, det_gram', [
    ('Z2xZ4', 8, 512),
    ('Z3xZ3', 9, 729),
    ('Z4xZ4', -16, 4096),
])
def test_special_arrays(spec, det_M, det_gram):
    arr = special_array(parse_group(spec))
    assert arr.det_M() == det_M
    assert arr.gram_det() == det_gram
    assert set(arr.column_norms_sq()) == {4}
    assert arr.to_basis().gram_det() == det_gram


def test_special_array_rejects_other_groups():
    with pytest.raises(HypothesisError):
        special_array(parse_group('Z2xZ2'))


def test_wellrounded_array_is_not_a_basis():
    arr = wellrounded_array(parse_group('Z3xZ3'))
    assert arr.det_M() == -45
    assert arr.is_admissible()
    assert set(arr.column_norms_sq()) == {4}
    assert arr.gram_det() != 9 ** 3
    with pytest.raises(VerificationError):
        arr.verify('basis')


def test_array_validation():
    G = parse_group('Z3')
    with pytest.raises(ValueError):
        AdmissibleArray(G, [(1,), (1,)], IntMatrix.identity(2))
    with pytest.raises(ValueError):
        AdmissibleArray(G, [(1,), (2,)], IntMatrix.identity(3))
    with pytest.raises(ValueError):
        AdmissibleArray.from_sparse(G, [(1,), (2,)], [{(0,): 1}])
    arr = AdmissibleArray(G, [(1,), (2,)], IntMatrix([[1, 0], [0, 1]]))
    assert not arr.is_admissible()
    with pytest.raises(VerificationError):
        arr.verify('well_rounded')
    with pytest.raises(ValueError):
        small_group_array(G).verify('bogus')


def test_permute_rows_keeps_admissibility():
    arr = special_array(parse_group('Z2xZ4'))
    order = [6, 0, 5, 1, 4, 2, 3]
    moved = arr.permute_rows(order)
    assert moved.is_admissible()
    assert abs(moved.det_M()) == abs(arr.det_M())
    assert moved.gram_det() == arr.gram_det()
    assert moved.to_basis().matrix == arr.to_basis().matrix
    with pytest.raises(ValueError):
        arr.permute_rows([0, 0, 1, 2, 3, 4, 5])


def test_relabel_along_automorphism():
    G = parse_group('Z5')
    arr = cyclic_minimal_array(5)
    doubled = arr.relabel(G, lambda g: G.scale(2, g))
    assert doubled.is_admissible()
    assert doubled.gram_det() == 125


def test_product_layout():
    assert product_layout((4,), (2, 3)) == [1, 2, 0]
    assert product_layout((2,), (2, 4)) == [0, 1, 2]


@pytest.mark.parametrize('a, b, order', [(5, 5, 25), (5, 7, 35), (6, 5, 30)])
def test_combine_cyclic_products(a, b, order):
    arr = combine_product(cyclic_minimal_array(a), cyclic_minimal_array(b))
    assert arr.group.order == order
    assert arr.gram_det() == order ** 3
    assert set(arr.column_norms_sq()) == {4}


def test_combine_with_special_arrays():
    arr = combine_product(special_array(parse_group('Z3xZ3')),
                          small_group_array(parse_group('Z2xZ2')))
    assert arr.group.moduli == (2, 2, 3, 3)
    assert arr.gram_det() == 36 ** 3


def test_combine_rejects_distance_above_two():
    with pytest.raises(HypothesisError):
        combine_product(small_group_array(parse_group('Z2')),
                        cyclic_minimal_array(5))
    with pytest.raises(HypothesisError):
        combine_product(cyclic_minimal_array(5),
                        small_group_array(parse_group('Z3')))


@pytest.mark.parametrize('m, base, order', [
    (2, 5, 10),
    (3, 5, 15),
    (4, 5, 20),
    (2, 7, 14),
    (4, 6, 24),
])
def test_attach_small_to_cyclic(m, base, order):
    arr = attach_small(m, cyclic_minimal_array(base))
    assert arr.group.order == order
    assert arr.gram_det() == order ** 3
    assert set(arr.column_norms_sq()) == {4}


def test_attach_small_to_products():
    assert attach_small(2, small_group_array(parse_group('Z2xZ2'))) \
        .gram_det() == 8 ** 3
    arr = attach_small(4, special_array(parse_group('Z2xZ4')))
    assert arr.group.moduli == (2, 4, 4)
    assert arr.gram_det() == 32 ** 3


@pytest.mark.parametrize('m, base', [(2, 5), (3, 5), (3, 7), (4, 5)])
def test_attach_block_determinant(m, base):
    arr = attach_small(m, cyclic_minimal_array(base))
    n = base - 1
    k = 2 if m == 2 else 3
    block = IntMatrix([[arr.M[n + i, n + j] for j in range(k)]
                       for i in range(k)])
    assert bareiss_det(block) == attach_block_det(m)


def test_attach_small_hypotheses():
    with pytest.raises(HypothesisError):
        attach_small(3, special_array(parse_group('Z3xZ3')))
    with pytest.raises(HypothesisError):
        attach_small(4, small_group_array(parse_group('Z2xZ2')))
    with pytest.raises(HypothesisError):
        attach_small(2, small_group_array(parse_group('Z3')))
    with pytest.raises(ValueError):
        attach_small(5, cyclic_minimal_array(5))


def test_attach_three_agrees_with_cyclic_15():
    attached = attach_small(3, cyclic_minimal_array(5))
    direct = cyclic_minimal_array(15)
    assert attached.group.moduli == (3, 5)
    assert attached.gram_det() == direct.gram_det() == 15 ** 3


def test_build_trace_to_dict():
    trace = BuildTrace(seed=3)
    trace.add('cyclic', 'Z5')
    trace.add('attach', 'Z2', 'Z5')
    assert len(trace) == 2
    assert trace.to_dict() == {
        'steps': [{'kind': 'cyclic', 'groups': ['Z5']},
                  {'kind': 'attach', 'groups': ['Z2', 'Z5']}],
        'fallback_used': False,
        'seed': 3,
    }
