"""Dense kernel: exponential, square root, Sylvester solver, quadrature."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from matlin import (
    BranchCutError,
    ExponentRangeError,
    QuadratureError,
    ShapeError,
    SylvesterSingularityError,
    adaptive_gauss_legendre,
    as_cmatrix,
    mat_exp,
    norm2,
    principal_sqrt,
    solve_sylvester,
)

entries = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n).map(np.array)


def test_as_cmatrix_shapes():
    assert as_cmatrix(2.0).shape == (1, 1)
    assert as_cmatrix([1, 2, 3]).shape == (3, 1)
    with pytest.raises(ShapeError):
        as_cmatrix(np.zeros((2, 2, 2)))
    with pytest.raises(ShapeError):
        as_cmatrix([[np.nan]])


def test_mat_exp_of_zero_is_identity():
    assert np.allclose(mat_exp(np.zeros((3, 3))), np.eye(3), atol=0)


def test_mat_exp_diagonal():
    E = mat_exp(np.diag([1.0, 2.0]))
    assert np.allclose(E, np.diag([np.e, np.e ** 2]), rtol=1e-14)


def test_mat_exp_nilpotent_is_exact():
    N = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert np.allclose(mat_exp(N), [[1.0, 1.0], [0.0, 1.0]], atol=1e-15)


def test_mat_exp_refuses_large_argument():
    with pytest.raises(ExponentRangeError):
        mat_exp(np.array([[1000.0]]))


def test_principal_sqrt_diagonal():
    X = principal_sqrt(np.diag([4.0, 9.0]))
    assert np.allclose(X, np.diag([2.0, 3.0]), rtol=1e-14)


def test_principal_sqrt_non_normal():
    M = np.array([[8.0, 6.0], [0.0, 8.0]])
    root = 2.0 * np.sqrt(2.0)
    X = principal_sqrt(M)
    assert np.allclose(X, [[root, 3.0 / root], [0.0, root]], rtol=1e-14, atol=1e-14)
    # P commutes with M, so it commutes with the principal root too
    P = np.array([[1.0, 2.0], [0.0, 1.0]])
    assert norm2(X @ P - P @ X) <= 1e-13


@pytest.mark.parametrize("value", [-1.0, 0.0])
def test_principal_sqrt_rejects_branch_cut(value):
    with pytest.raises(BranchCutError):
        principal_sqrt(np.array([[value]]))


def test_principal_sqrt_complex_scalar():
    X = principal_sqrt(np.array([[2j]]))
    assert abs(X[0, 0] - (1 + 1j)) < 1e-14


@settings(max_examples=30, deadline=None)
@given(square(3))
def test_principal_sqrt_of_positive_matrix(B):
    M = B @ B.T + np.eye(3)
    X = principal_sqrt(M)
    assert norm2(X @ X - M) <= 1e-10 * norm2(M)
    assert norm2(X @ M - M @ X) <= 1e-10 * norm2(M)
    # the principal root of a Hermitian positive matrix is Hermitian positive
    assert np.min(np.linalg.eigvalsh(0.5 * (X + X.conj().T))) > 0


def test_solve_sylvester_scalar():
    X = solve_sylvester([[2.0]], [[-1.0]], [[6.0]])
    assert abs(X[0, 0] - 2.0) < 1e-14


def test_solve_sylvester_conjugate_spectra():
    X = solve_sylvester(2j * np.eye(2), -2j * np.eye(2), np.eye(2))
    assert np.allclose(X, np.eye(2) / 4j, rtol=1e-14, atol=1e-15)


def test_solve_sylvester_detects_shared_eigenvalue():
    with pytest.raises(SylvesterSingularityError) as info:
        solve_sylvester(np.diag([1.0, 2.0]), np.diag([2.0, 5.0]), np.ones((2, 2)))
    assert abs(info.value.alpha - 2.0) < 1e-12


def test_solve_sylvester_shape_check():
    with pytest.raises(ShapeError):
        solve_sylvester(np.eye(2), np.eye(3) * 5, np.ones((3, 2)))


@settings(max_examples=30, deadline=None)
@given(square(3), square(3), square(3))
def test_solve_sylvester_residual(upper_a, upper_b, C):
    # spectra separated: diag(A) in [2, 4], diag(B) in [-4, -2]
    A = np.triu(upper_a) + np.diag([3.0, 2.5, 3.5])
    B = np.triu(upper_b) - np.diag([3.0, 2.5, 3.5])
    X = solve_sylvester(A, B, C)
    assert norm2(A @ X - X @ B - C) <= 1e-10 * (1.0 + norm2(C))


def test_quadrature_polynomial():
    value = adaptive_gauss_legendre(lambda x: np.array([[x * x]]), 0.0, 1.0)
    assert abs(value[0, 0] - 1.0 / 3.0) < 1e-14


def test_quadrature_matrix_valued_and_reversed():
    f = lambda x: np.array([[np.exp(x), 0.0], [0.0, np.cos(x)]])
    value = adaptive_gauss_legendre(f, 1.0, 0.0)
    assert abs(value[0, 0] + (np.e - 1.0)) < 1e-12
    assert abs(value[1, 1] + np.sin(1.0)) < 1e-12


def test_quadrature_empty_interval():
    value = adaptive_gauss_legendre(lambda x: np.array([[1.0]]), 0.5, 0.5)
    assert value[0, 0] == 0


def test_quadrature_reports_non_convergence():
    step = lambda x: np.array([[1.0 if x > 0.3 else 0.0]])
    with pytest.raises(QuadratureError):
        adaptive_gauss_legendre(step, 0.0, 1.0, max_depth=1)


@settings(max_examples=30, deadline=None)
@given(square(3), st.floats(min_value=0.1, max_value=40.0))
def test_mat_exp_inverse(M, scale):
    M = scale * M / max(norm2(M), 1e-12)
    assert norm2(mat_exp(M) @ mat_exp(-M) - np.eye(3)) <= 1e-9 * max(1.0, norm2(mat_exp(M)) * norm2(mat_exp(-M)))
