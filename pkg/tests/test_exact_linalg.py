import itertools
import random
from fractions import Fraction

import pytest

from arrays.cyclic import cyclic_basis
from core.covering import banded_gram
from core.exact_linalg import EchelonBasis
from core.exact_linalg import IntMatrix
from core.exact_linalg import adjugate
from core.exact_linalg import bareiss_det
from core.exact_linalg import cauchy_binet_check
from core.exact_linalg import gram
from core.exact_linalg import hnf
from core.exact_linalg import hnf_contains
from core.exact_linalg import integer_rank
from core.exact_linalg import ldl_decompose
from core.exact_linalg import ldl_solve
from core.exact_linalg import leading_principal_minors
from core.exact_linalg import parse_matrix_text
from core.exact_linalg import rational_inverse
from core.exact_linalg import same_lattice
from core.exact_linalg import xgcd
from utils.errors import CapExceededError
from utils.errors import MatrixFormatError


def cofactor_det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * a * cofactor_det(minor)
    return total


def random_matrix(rng, rows, cols, lo=-3, hi=3):
    return IntMatrix([[rng.randint(lo, hi) for _ in range(cols)]
                      for _ in range(rows)])


def test_matrix_shape_checks():
    with pytest.raises(ValueError):
        IntMatrix([])
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
    A = IntMatrix([[1, 2, 3], [4, 5, 6]])
    assert A.shape == (2, 3)
    assert A.T.shape == (3, 2)
    assert A.column(1) == (2, 5)
    assert A.submatrix_columns(2) == IntMatrix([[1, 2], [4, 5]])
    assert A.delete_row(0) == IntMatrix([[4, 5, 6]])
    assert IntMatrix.from_columns([(1, 4), (2, 5), (3, 6)]) == A
    with pytest.raises(ValueError):
        A @ A


def test_matmul():
    A = IntMatrix([[1, 2], [3, 4]])
    assert A @ IntMatrix.identity(2) == A
    assert A @ A == IntMatrix([[7, 10], [15, 22]])


def test_parse_matrix_text():
    text = '# comment\n2 3\n1 -2 0\n 4 5 10000000000000000000000\n'
    A = parse_matrix_text(text)
    assert A.shape == (2, 3)
    assert A[1, 2] == 10 ** 22
    assert parse_matrix_text(A.to_text()) == A


@pytest.mark.parametrize('text', [
    '',
    '2\n1 2\n',
    '2 2\n1 2\n',
    '2 2\n1 2\n3 x\n',
    '1 2\n1 2 3\n',
    '0 2\n',
])
def test_parse_matrix_text_errors(text):
    with pytest.raises(MatrixFormatError):
        parse_matrix_text(text)


def test_bareiss_printed_examples():
    assert bareiss_det(banded_gram(4, wrap=True)) == 125
    assert bareiss_det(banded_gram(4)) == 105
    assert bareiss_det(IntMatrix.identity(5)) == 1
    with pytest.raises(ValueError):
        bareiss_det(IntMatrix([[1, 2, 3]]))


def test_bareiss_needs_pivoting():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0
    assert bareiss_det([[0, 0], [0, 3]]) == 0


def test_bareiss_matches_cofactor_expansion():
    rng = random.Random(1234)
    for _ in range(300):
        k = rng.randint(1, 5)
        A = random_matrix(rng, k, k, -9, 9)
        assert bareiss_det(A) == cofactor_det(A.to_lists())


def test_bareiss_large_entries():
    A = IntMatrix([[10 ** 30, 1], [1, 10 ** 30]])
    assert bareiss_det(A) == 10 ** 60 - 1


def test_gram_examples():
    assert gram(cyclic_basis(2).matrix) == IntMatrix([[6, -3], [-3, 6]])
    assert gram(IntMatrix.from_columns([(-2, 1, 0, 1)])) == IntMatrix([[6]])
    assert gram(IntMatrix([[0], [0]])) == IntMatrix([[0]])


def test_gram_is_positive_semidefinite():
    rng = random.Random(7)
    for _ in range(50):
        rows = rng.randint(2, 6)
        A = random_matrix(rng, rows, rng.randint(1, rows))
        G = gram(A)
        assert G == G.T
        for k in range(1, G.rows + 1):
            block = IntMatrix([r[:k] for r in G.to_lists()[:k]])
            assert bareiss_det(block) >= 0


def test_integer_rank():
    z4_minimal = IntMatrix.from_columns([(1, 1, -1, -1), (-1, -1, 1, 1),
                                         (1, -1, 1, -1), (-1, 1, -1, 1)])
    assert integer_rank(z4_minimal) == 2
    assert integer_rank(IntMatrix.identity(6)) == 6
    z3_minimal = IntMatrix.from_columns([(-2, 1, 1), (2, -1, -1), (1, -2, 1),
                                         (-1, 2, -1), (1, 1, -2), (-1, -1, 2)])
    assert integer_rank(z3_minimal) == 2
    assert integer_rank(IntMatrix([[0, 0], [0, 0]])) == 0


def test_integer_rank_matches_gram_det():
    rng = random.Random(99)
    for _ in range(100):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, rows)
        A = random_matrix(rng, rows, cols, -1, 1)
        full = bareiss_det(gram(A)) != 0
        assert (integer_rank(A) == cols) == full


def test_xgcd():
    for a, b in [(240, 46), (-7, 3), (0, 5), (5, 0), (-4, -6), (0, 0)]:
        g, s, t = xgcd(a, b)
        assert g >= 0
        assert s * a + t * b == g
        if a or b:
            assert a % g == 0 and b % g == 0


def test_hnf_examples():
    A = IntMatrix([[2, 0], [0, 4]])
    assert hnf(A) == A
    assert hnf(IntMatrix([[4, 2], [0, 0]])) == IntMatrix([[2, 0], [0, 0]])


def test_hnf_of_cyclic_basis_has_index_four():
    H = hnf(cyclic_basis(3).matrix)
    pivots = [H[j, j] for j in range(3)]
    assert all(p > 0 for p in pivots)
    assert pivots[0] * pivots[1] * pivots[2] == 4


def _is_lower_echelon(H):
    last = -1
    for col in H.columns():
        r = next((i for i, x in enumerate(col) if x), None)
        if r is None:
            last = H.rows
            continue
        if r <= last or col[r] <= 0:
            return False
        last = r
    return True


def test_hnf_spans_same_lattice():
    rng = random.Random(2024)
    for _ in range(60):
        rows = rng.randint(1, 5)
        A = random_matrix(rng, rows, rng.randint(1, 6), -5, 5)
        H = hnf(A)
        assert _is_lower_echelon(H)
        assert same_lattice(A, H)
        for col in A.columns():
            assert hnf_contains(H, col)


def test_hnf_contains_rejects_non_members():
    H = hnf(IntMatrix([[2, 0], [0, 3]]))
    assert hnf_contains(H, (4, 9))
    assert not hnf_contains(H, (1, 0))
    assert not hnf_contains(H, (0, 4))
    with pytest.raises(ValueError):
        hnf_contains(H, (1, 2, 3))


def test_same_lattice():
    A = IntMatrix([[1, 0], [0, 1]])
    B = IntMatrix([[1, 1], [0, 1]])
    C = IntMatrix([[2, 0], [0, 1]])
    assert same_lattice(A, B)
    assert not same_lattice(A, C)


@pytest.mark.parametrize('n, expected', [(2, 27), (3, 64)])
def test_cauchy_binet_cyclic(n, expected):
    cb = cauchy_binet_check(cyclic_basis(n).matrix)
    assert cb.lhs == cb.rhs == expected
    assert cb.equal


def test_cauchy_binet_random():
    rng = random.Random(5)
    for _ in range(200):
        rows = rng.randint(1, 7)
        A = random_matrix(rng, rows, rng.randint(1, rows))
        assert cauchy_binet_check(A).equal


def test_cauchy_binet_square():
    A = IntMatrix([[2, 1], [7, 4]])
    cb = cauchy_binet_check(A)
    assert cb.rhs == bareiss_det(A) ** 2 == 1


def test_cauchy_binet_limits():
    with pytest.raises(ValueError):
        cauchy_binet_check(IntMatrix([[1, 2, 3]]))
    with pytest.raises(CapExceededError):
        cauchy_binet_check(IntMatrix.zeros(17, 1))
    assert cauchy_binet_check(IntMatrix.zeros(17, 1), max_rows=17).equal


def test_ldl_reconstructs_matrix():
    G = banded_gram(5, wrap=True)
    L, D = ldl_decompose(G)
    n = G.rows
    for i in range(n):
        for j in range(n):
            value = sum(L[i][k] * D[k] * L[j][k] for k in range(n))
            assert value == G[i, j]
    prod = Fraction(1)
    for d in D:
        prod *= d
    assert prod == 216


def test_ldl_rejects_indefinite():
    with pytest.raises(ValueError):
        ldl_decompose([[1, 2], [2, 1]])


def test_ldl_solve():
    G = banded_gram(4)
    L, D = ldl_decompose(G)
    b = [1, -2, 3, 5]
    x = ldl_solve(L, D, b)
    for i in range(4):
        assert sum(G[i, j] * x[j] for j in range(4)) == b[i]


def test_rational_inverse_and_adjugate():
    A = IntMatrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    inv = rational_inverse(A)
    for i, j in itertools.product(range(3), repeat=2):
        assert sum(A[i, k] * inv[k][j] for k in range(3)) == int(i == j)
    adj, det = adjugate(A)
    assert det == 18
    assert A @ adj == IntMatrix([[18 * int(i == j) for j in range(3)]
                                 for i in range(3)])
    with pytest.raises(ValueError):
        rational_inverse([[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        adjugate(IntMatrix([[1, 2], [2, 4]]))


def test_echelon_basis():
    eb = EchelonBasis(3)
    assert eb.add((1, 1, 0))
    assert eb.add((0, 1, 1))
    assert not eb.add((1, 2, 1))
    assert eb.rank == 2
    assert not eb.is_independent((2, 0, -2))
    assert eb.is_independent((0, 0, 1))
    assert eb.add((0, 0, 1))
    assert eb.rank == 3
    with pytest.raises(ValueError):
        eb.add((1, 2))


def test_echelon_basis_matches_rank():
    rng = random.Random(11)
    for _ in range(50):
        vectors = [[rng.randint(-2, 2) for _ in range(4)] for _ in range(6)]
        eb = EchelonBasis(4)
        for v in vectors:
            eb.add(v)
        assert eb.rank == integer_rank(IntMatrix(vectors))


def test_leading_principal_minors():
    assert leading_principal_minors(banded_gram(4)) == [6, 20, 50, 105]
    with pytest.raises(ValueError):
        leading_principal_minors([[0, 1], [1, 0]])
