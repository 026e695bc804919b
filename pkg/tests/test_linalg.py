import numpy as np
import pytest
from hypothesis import given, settings
from numpy.testing import assert_allclose, assert_array_equal

from conftest import complex_matrices, random_complex
from numrad.errors import DimensionMismatchError, InvalidMatrixError, NotHermitianError, NotPSDError
from numrad.harness.ensembles import random_unitary
from numrad.linalg import (
    adjoint,
    as_matrix,
    block_antidiag,
    cartesian_parts,
    classify,
    hermitian_eigen,
    jacobi_eigh,
    lambda_max,
    matrix_abs,
    multiply,
    operator_norm,
    psd_sqrt,
)

N = np.array([[0, 3], [0, 0]], dtype=complex)


# -- validation ------------------------------------------------------------


@pytest.mark.parametrize(
    "bad",
    [np.zeros((2, 3)), np.zeros((0, 0)), np.zeros(3), [[1, np.nan], [0, 1]], [[np.inf, 0], [0, 1]]],
)
def test_as_matrix_rejects_bad_input(bad):
    with pytest.raises(InvalidMatrixError):
        as_matrix(bad)


def test_as_matrix_returns_read_only_copy():
    src = np.eye(2)
    m = as_matrix(src)
    src[0, 0] = 7
    assert m[0, 0] == 1
    with pytest.raises(ValueError):
        m[0, 0] = 2


# -- adjoint / multiply ------------------------------------------------------


def test_adjoint_examples():
    assert_array_equal(adjoint(np.eye(3)), np.eye(3))
    assert_array_equal(adjoint(N), [[0, 0], [3, 0]])
    m = np.zeros((2, 2), dtype=complex)
    m[0, 1] = 1j
    assert adjoint(m)[1, 0] == -1j


@given(complex_matrices())
def test_adjoint_is_an_involution(m):
    assert_array_equal(adjoint(adjoint(m)), m)


def test_multiply_examples(rng):
    m = random_complex(rng, 3)
    assert_allclose(multiply(np.eye(3), m), m, rtol=0, atol=0)
    assert_array_equal(multiply(N, N), np.zeros((2, 2)))


def test_multiply_matches_triple_loop(rng):
    a, b = random_complex(rng, 3), random_complex(rng, 3)
    naive = np.zeros((3, 3), dtype=complex)
    for i in range(3):
        for j in range(3):
            for k in range(3):
                naive[i, j] += a[i, k] * b[k, j]
    assert_allclose(multiply(a, b), naive, rtol=1e-14, atol=1e-14)


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        multiply(np.eye(2), np.eye(3))


# -- eigen ---------------------------------------------------------------------


@pytest.mark.parametrize("method", ["lapack", "jacobi"])
def test_hermitian_eigen_examples(method):
    assert_allclose(hermitian_eigen(np.diag([2.0, -5.0]), method).eigenvalues, [-5, 2])
    assert_allclose(hermitian_eigen([[0, 1], [1, 0]], method).eigenvalues, [-1, 1], atol=1e-15)


@pytest.mark.parametrize("method", ["lapack", "jacobi"])
def test_hermitian_eigen_reconstructs_random_4x4(rng, method):
    g = random_complex(rng, 4)
    h = (g + g.conj().T) / 2
    eig = hermitian_eigen(h, method)
    v = eig.eigenvectors
    assert np.all(np.diff(eig.eigenvalues) >= 0)
    assert np.max(np.abs(eig.reconstruct() - h)) < 1e-10
    assert np.max(np.abs(v.conj().T @ v - np.eye(4))) < 1e-10


def test_jacobi_agrees_with_lapack(rng):
    for n in range(1, 9):
        g = random_complex(rng, n)
        h = (g + g.conj().T) / 2
        w, v = jacobi_eigh(h)
        assert_allclose(w, np.linalg.eigvalsh(h), atol=1e-12)
        assert np.max(np.abs((v * w) @ v.conj().T - h)) < 1e-11


def test_jacobi_handles_repeated_eigenvalues():
    u = random_unitary(np.random.default_rng(3), 4)
    h = (u * np.array([1.0, 1.0, 1.0, -2.0])) @ u.conj().T
    w, v = jacobi_eigh(h)
    assert_allclose(w, [-2, 1, 1, 1], atol=1e-12)
    assert np.max(np.abs(v.conj().T @ v - np.eye(4))) < 1e-12


@given(complex_matrices())
@settings(max_examples=60, deadline=None)
def test_jacobi_reconstruction_property(m):
    h = (m + m.conj().T) / 2
    eig = hermitian_eigen(h, "jacobi")
    scale = 1 + np.linalg.norm(h, 2)
    assert np.max(np.abs(eig.reconstruct() - h)) <= 1e-10 * scale
    v = eig.eigenvectors
    assert np.max(np.abs(v.conj().T @ v - np.eye(h.shape[0]))) <= 1e-10


def test_hermitian_eigen_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        hermitian_eigen(N)
    with pytest.raises(ValueError):
        hermitian_eigen(np.eye(2), method="qr")


def test_lambda_max():
    assert lambda_max(np.diag([1.0, 4.0, -7.0])) == pytest.approx(4.0)


# -- square roots and moduli -----------------------------------------------------


def test_psd_sqrt_examples():
    assert_allclose(psd_sqrt(np.diag([9.0, 4.0])), np.diag([3.0, 2.0]), atol=1e-15)
    assert_array_equal(psd_sqrt(np.zeros((3, 3))), np.zeros((3, 3)))


@pytest.mark.parametrize("method", ["lapack", "jacobi"])
def test_psd_sqrt_squares_back(rng, method):
    g = random_complex(rng, 4)
    h = g.conj().T @ g
    r = psd_sqrt(h, method)
    assert np.max(np.abs(r - r.conj().T)) == 0
    assert np.min(np.linalg.eigvalsh(r)) >= -1e-12
    assert np.max(np.abs(r @ r - h)) <= 1e-9 * (1 + np.linalg.norm(h, 2))


def test_psd_sqrt_clamps_roundoff_but_rejects_indefinite():
    assert_allclose(psd_sqrt(np.diag([4.0, -1e-12])), np.diag([2.0, 0.0]))
    with pytest.raises(NotPSDError):
        psd_sqrt(np.diag([4.0, -1e-3]))


def test_matrix_abs_examples(rng):
    assert_allclose(matrix_abs(N), np.diag([0, 3]), atol=1e-15)
    assert_allclose(matrix_abs(adjoint(N)), np.diag([3, 0]), atol=1e-15)
    assert_allclose(matrix_abs(np.diag([3j, -2])), np.diag([3, 2]), atol=1e-15)
    u = random_unitary(rng, 4)
    assert np.max(np.abs(matrix_abs(u) - np.eye(4))) < 1e-10


@given(complex_matrices())
@settings(max_examples=80, deadline=None)
def test_matrix_abs_is_psd_with_the_same_norm(m):
    a = matrix_abs(m)
    assert np.max(np.abs(a - a.conj().T)) <= 1e-12 * (1 + np.max(np.abs(a)))
    norm = np.linalg.norm(m, 2)
    assert np.min(np.linalg.eigvalsh(a)) >= -1e-10 * (1 + norm)
    assert abs(operator_norm(a) - norm) <= 1e-9 * (1 + norm)
    # |m|^2 = m* m, the defining property (square root computed independently)
    assert np.max(np.abs(a @ a - m.conj().T @ m)) <= 1e-9 * (1 + norm) ** 2


# -- operator norm -----------------------------------------------------------------


def test_operator_norm_examples():
    assert operator_norm(N) == pytest.approx(3.0, abs=1e-14)
    for n in (1, 3, 6):
        assert operator_norm(np.eye(n)) == pytest.approx(1.0, abs=1e-15)
    t = np.array([[2, 0], [1, 5]], dtype=float)
    g = t.T @ t
    tr, det = np.trace(g), np.linalg.det(g)
    closed = np.sqrt((tr + np.sqrt(tr * tr - 4 * det)) / 2)
    assert operator_norm(t) == pytest.approx(closed, rel=1e-12)


@given(complex_matrices())
@settings(max_examples=80, deadline=None)
def test_norm_of_m_mstar_is_norm_squared(m):
    nm = operator_norm(m)
    assert abs(operator_norm(m @ m.conj().T) - nm**2) <= 1e-9 * (1 + nm**2)


# -- Cartesian parts and blocks ---------------------------------------------------------


def test_cartesian_parts_examples(rng):
    g = random_complex(rng, 3)
    h = (g + g.conj().T) / 2
    re, im = cartesian_parts(h)
    assert_array_equal(re, h)
    assert_array_equal(im, np.zeros((3, 3)))
    re, im = cartesian_parts(1j * h)
    assert_allclose(re, 0, atol=0)
    assert_array_equal(im, h)


@given(complex_matrices())
def test_cartesian_parts_are_hermitian_and_recompose(m):
    re, im = cartesian_parts(m)
    assert_array_equal(re, re.conj().T)
    assert_array_equal(im, im.conj().T)
    # (a + a')/2 + (a - a')/2 differs from a by at most one rounding
    eps = np.finfo(float).eps
    assert np.all(np.abs(re + 1j * im - m) <= 2 * eps * (np.abs(m) + np.abs(m.T)))
    assert_array_equal(np.diag(re + 1j * im), np.diag(m))


def test_block_antidiag_examples(rng):
    eye = np.eye(2)
    assert_array_equal(block_antidiag(eye, eye), [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    a = random_complex(rng, 2)
    blk = block_antidiag(a, np.zeros((2, 2)))
    assert_array_equal(blk[:2, 2:], a)
    assert np.count_nonzero(blk[2:, :]) == 0 and np.count_nonzero(blk[:2, :2]) == 0
    b = random_complex(rng, 3)
    a = random_complex(rng, 3)
    blk = block_antidiag(a, b)
    assert_array_equal(blk[3:, :3], b.conj().T)
    assert_array_equal(blk[:3, 3:], a)
    assert operator_norm(blk) == pytest.approx(max(operator_norm(a), operator_norm(b)), rel=1e-12)
    with pytest.raises(DimensionMismatchError):
        block_antidiag(np.eye(2), np.eye(3))


# -- classification --------------------------------------------------------------------


def test_classify_examples():
    flags = classify(N)
    assert flags.is_square_zero and not flags.is_normal
    flags = classify(np.eye(3))
    assert flags.is_hermitian and flags.is_normal and flags.is_accretive_dissipative
    t = np.array([[1, 0], [4, 1]])
    commutator = t.T @ t - t @ t.T
    assert np.linalg.norm(commutator, 2) > 1
    assert not classify(t).is_normal
    assert flags.satisfies("none") and not classify(t).satisfies("hermitian")


def test_classify_tolerance_is_relative():
    big = 1e6 * np.array([[1, 1e-9], [0, 1]])
    assert classify(big).is_normal  # commutator norm 1e-6, below 1e-10 * (1 + ||m||) ~ 1e-4
    assert not classify(np.array([[1, 1e-3], [0, 1]])).is_normal
