import numpy as np
import pytest

from homres import linalg
from homres.errors import InvalidInput


def test_check_modulus_rejects_composite_and_huge():
    with pytest.raises(InvalidInput):
        linalg.check_modulus(4)
    with pytest.raises(InvalidInput):
        linalg.check_modulus(1)
    with pytest.raises(InvalidInput):
        linalg.check_modulus((1 << 20) + 7)
    linalg.check_modulus(2)
    linalg.check_modulus(1048573)  # largest prime below 2^20


def test_rref_hand_example_gf5():
    # Hand elimination over GF(5):
    # [1 2 3]      [1 0 2]   (r2 -= 4 r1 -> [0 3 4]; scale by 3^-1=2 -> [0 1 3];
    # [4 1 1]  ->  [0 1 3]    r1 -= 2 r2 -> [1 0 -3] = [1 0 2])
    m = [[1, 2, 3], [4, 1, 1]]
    r, piv = linalg.rref(m, 5)
    assert piv == [0, 1]
    assert r.tolist() == [[1, 0, 2], [0, 1, 3]]


def test_rank_and_kernel_consistency():
    rng = np.random.default_rng(0)
    for p in (2, 3, 7, 101):
        for _ in range(10):
            m = rng.integers(0, p, size=(4, 6))
            k = linalg.kernel_basis(m, p)
            assert k.shape[0] == 6 - linalg.rank(m, p)
            assert not np.any((np.asarray(m) @ k.T) % p)


def test_kernel_basis_hand_example():
    # x + y = 0 over GF(3): kernel spanned by (2, 1) after normalization
    k = linalg.kernel_basis([[1, 1]], 3)
    assert k.tolist() == [[2, 1]]


def test_solve_free_variables_zero():
    # Underdetermined: x0 + x1 = 1 over GF(7); deterministic answer sets the
    # free variable x1 = 0.
    x = linalg.solve_linear([[1, 1]], [1], 7)
    assert x.tolist() == [[1], [0]]


def test_solve_inconsistent_returns_none():
    assert linalg.solve_linear([[1], [1]], [1, 2], 5) is None


def test_solve_matrix_rhs():
    a = [[2, 1], [1, 1]]
    b = [[1, 0], [0, 1]]
    x = linalg.solve_linear(a, b, 7)
    assert ((np.array(a) @ x) % 7).tolist() == b


def test_inverse_round_trip():
    rng = np.random.default_rng(1)
    p = 11
    for _ in range(20):
        m = rng.integers(0, p, size=(3, 3))
        inv = linalg.inverse(m, p)
        if inv is None:
            assert linalg.rank(m, p) < 3
        else:
            assert ((m @ inv) % p).tolist() == np.eye(3, dtype=int).tolist()


def test_mat_pow():
    m = np.array([[1, 1], [0, 1]], dtype=np.int64)
    assert linalg.mat_pow(m, 5, 3)[0, 1] == 5 % 3
    assert linalg.mat_pow(m, 0, 3).tolist() == [[1, 0], [0, 1]]


def test_row_space_contains():
    rows = np.array([[1, 2, 0], [0, 0, 1]], dtype=np.int64)
    assert linalg.row_space_contains(rows, np.array([2, 4, 3]), 5)
    assert not linalg.row_space_contains(rows, np.array([0, 1, 0]), 5)
    empty = linalg.zeros(0, 3)
    assert linalg.row_space_contains(empty, np.zeros(3, dtype=np.int64), 5)
    assert not linalg.row_space_contains(empty, np.array([1, 0, 0]), 5)


def test_determinism_bit_identical():
    rng = np.random.default_rng(2)
    m = rng.integers(0, 13, size=(5, 8))
    k1 = linalg.kernel_basis(m, 13)
    k2 = linalg.kernel_basis(m.copy(), 13)
    assert np.array_equal(k1, k2)
