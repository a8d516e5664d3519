import math

import numpy as np
import pytest

from matlin import DegenerateSpectrumError, IdentityResidualError, ShapeError, SylvesterSingularityError
from seed import (
    Branch,
    JordanBlock,
    JordanSpec,
    SeedPotential,
    SystemKind,
    assemble_triple,
    build_q_generic,
    build_q_jordan,
    check_realness_hypotheses,
    derive_f34,
    s0_min_eigenvalue,
)
from tests.helpers import rel_err

SQRT3 = math.sqrt(3.0)


def test_seed_potential_validation():
    with pytest.raises(ShapeError):
        SeedPotential(a=0.0, c=0.0)
    with pytest.raises(ShapeError):
        SeedPotential(a=1.0, c=1j)
    assert SeedPotential(a=1.0, c=complex(2.0, 0.0)).c == 2.0


def test_seed_potential_matrix():
    seed = SeedPotential(a=2j, c=0.5, p=1)
    V = seed.potential_matrix(1.0)
    v = 2j * np.exp(1j)
    assert np.allclose(V, [[0, v], [np.conj(v), 0]])


def test_system_kind_signatures():
    sa, skew = SystemKind.self_adjoint(2), SystemKind.skew(2)
    assert np.allclose(sa.j, np.diag([1, 1, -1, -1]))
    assert np.allclose(sa.j_kappa, sa.j) and np.allclose(sa.j_kappa_plus_one, np.eye(4))
    assert np.allclose(skew.j_kappa, np.eye(4)) and np.allclose(skew.j_kappa_plus_one, skew.j)
    with pytest.raises(ShapeError):
        SystemKind.skew(0)


def test_jordan_spec_matrix_with_similarity():
    spec = JordanSpec(blocks=(JordanBlock(2j, 2),), similarity=np.diag([1.0, 1.0 / 1j]))
    assert np.allclose(spec.matrix(), 1j * np.array([[2.0, 1.0], [0.0, 2.0]]))


def test_q_generic_diagonal_self_adjoint():
    Q = build_q_generic(np.diag([3.0, 5.0]), SeedPotential(a=1.0, c=0.0), SystemKind.self_adjoint())
    assert np.allclose(Q, np.diag([math.sqrt(8.0), math.sqrt(24.0)]), rtol=1e-12)


def test_q_generic_falls_back_to_rotated_root():
    Q = build_q_generic(np.array([[2j]]), SeedPotential(a=1j, c=0.0), SystemKind.skew())
    assert abs(Q[0, 0] - 1j * SQRT3) < 1e-12


def test_q_generic_degenerate_spectrum():
    with pytest.raises(DegenerateSpectrumError):
        build_q_generic(np.array([[1.0]]), SeedPotential(a=1.0, c=0.0), SystemKind.self_adjoint())


def test_q_paths_agree_on_diagonalizable_matrix():
    seed, kind = SeedPotential(a=1.0, c=0.5), SystemKind.self_adjoint()
    spec = JordanSpec(blocks=(JordanBlock(3.0, 1), JordanBlock(5.0, 1)))
    assert rel_err(build_q_jordan(spec, seed, kind), build_q_generic(spec.matrix(), seed, kind)) < 1e-8


def test_q_jordan_branch_choice():
    seed, kind = SeedPotential(a=1.0, c=0.0), SystemKind.self_adjoint()
    plus = build_q_jordan(JordanSpec(blocks=(JordanBlock(3.0, 1, Branch.PLUS),)), seed, kind)
    minus = build_q_jordan(JordanSpec(blocks=(JordanBlock(3.0, 1, Branch.MINUS),)), seed, kind)
    assert np.allclose(minus, -plus)


def test_q_jordan_cell(dw_params):
    spec = JordanSpec(blocks=(JordanBlock(1j * dw_params.lam, 2),),
                      similarity=np.diag([1.0, 1.0 / (1j * dw_params.b)]))
    Q = build_q_jordan(spec, SeedPotential(a=1j * dw_params.r, c=0.0), SystemKind.skew())
    mu, lam, b = dw_params.mu, dw_params.lam, dw_params.b
    expected = 1j * np.array([[mu, b * lam / mu], [0.0, mu]])
    assert rel_err(Q, expected) < 1e-12


def test_q_jordan_size_three_squares_to_target():
    seed, kind = SeedPotential(a=1.0, c=0.0), SystemKind.self_adjoint()
    spec = JordanSpec(blocks=(JordanBlock(3.0, 3),))
    A = spec.matrix()
    Q = build_q_jordan(spec, seed, kind)
    assert np.allclose(Q @ Q, A @ A - np.eye(3), atol=1e-12)


def test_f34_zero_for_zero_input():
    f3, f4 = derive_f34(np.eye(2), np.eye(2), np.zeros((2, 1)), np.zeros((2, 1)),
                        SeedPotential(a=1.0, c=0.0), SystemKind.self_adjoint())
    assert not np.any(f3) and not np.any(f4)


def test_f34_scalar_example(ee_dw0_triple, dw_params):
    r, lam, mu, d = dw_params.r, dw_params.lam, dw_params.mu, dw_params.d
    realization = ee_dw0_triple.realization
    assert abs(realization.f3[0, 0] - (-1j * d / r * (lam + mu))) < 1e-12
    assert abs(realization.f4[0, 0] - (1j / r * (mu - lam))) < 1e-12


def test_f34_jordan_example(ee_dw1_triple, dw_params):
    r, lam, mu, d, b = dw_params.r, dw_params.lam, dw_params.mu, dw_params.d, dw_params.b
    realization = ee_dw1_triple.realization
    assert rel_err(realization.f3, -1j * d / r * np.array([[lam + mu], [0.0]])) < 1e-12
    assert rel_err(realization.f4, 1j / r * np.array([[b * (lam / mu - 1.0)], [mu - lam]])) < 1e-12


def test_scalar_example_s0(ee_dw0_triple):
    assert abs(ee_dw0_triple.S0[0, 0] - 5.0) < 1e-12
    assert abs(ee_dw0_triple.Pi0[0, 0] - 2.0) < 1e-12
    assert abs(ee_dw0_triple.Pi0[0, 1] + 4j) < 1e-12


def test_jordan_example_s0_matches_closed_form(ee_dw1_triple):
    S0 = ee_dw1_triple.S0
    assert abs(S0[0, 0] - 3.2380) < 1e-3
    assert abs(S0[0, 1] - 0.42265) < 1e-4
    assert abs(S0[1, 1] - 0.26795) < 1e-4
    assert s0_min_eigenvalue(ee_dw1_triple) > 0


def test_self_adjoint_scalar_s0(sa_scalar_triple):
    expected = (1.1 ** 2 - (0.1 * (1 + math.sqrt(2.0)) - (math.sqrt(2.0) - 1)) ** 2) / 2.0
    assert abs(sa_scalar_triple.S0[0, 0] - expected) < 1e-12


def test_identity_residual_small(canned_triple):
    residual = canned_triple.identity_residual(canned_triple.S0, canned_triple.Pi0)
    assert residual <= 1e-10 * (1.0 + np.linalg.norm(canned_triple.S0, 2))


def test_trivial_triple_needs_supplied_s0():
    with pytest.raises(SylvesterSingularityError):
        assemble_triple(np.array([[3.0]]), None, [[0.0]], [[0.0]], SeedPotential(a=1.0, c=0.0),
                        SystemKind.self_adjoint())


def test_supplied_s0_violating_identity():
    with pytest.raises(IdentityResidualError):
        assemble_triple(np.array([[1j]]), None, [[0.1]], [[1.0]], SeedPotential(a=1.0, c=0.0),
                        SystemKind.self_adjoint(), S0=[[0.7]])


def test_supplied_non_hermitian_s0():
    with pytest.raises(IdentityResidualError):
        assemble_triple(np.diag([3.0, 4.0]), None, np.zeros((2, 1)), np.zeros((2, 1)),
                        SeedPotential(a=1.0, c=0.0), SystemKind.self_adjoint(), S0=[[1.0, 1.0], [0.0, 1.0]])


def test_realness_hypotheses(ee_dw0_triple, ee_dw1_triple, sa_scalar_triple, trivial_ssa_triple):
    assert check_realness_hypotheses(ee_dw0_triple) == []
    assert check_realness_hypotheses(ee_dw1_triple) == []
    assert "system kind is skew-self-adjoint" in check_realness_hypotheses(sa_scalar_triple)
    assert "iA real" in check_realness_hypotheses(trivial_ssa_triple)


def test_realness_of_initial_values(ee_dw0_triple, ee_dw1_triple):
    for triple in (ee_dw0_triple, ee_dw1_triple):
        n = triple.n
        assert np.max(np.abs(triple.S0.imag)) <= 1e-12
        assert np.max(np.abs(triple.Pi0[:, 0].imag)) <= 1e-12
        assert np.max(np.abs((1j * triple.Pi0[:, 1]).imag)) <= 1e-12
        assert triple.Pi0.shape == (n, 2)


def test_triple_arrays_are_read_only(ee_dw0_triple):
    with pytest.raises(ValueError):
        ee_dw0_triple.S0[0, 0] = 1.0


def test_trivial_flag(trivial_sa_triple, trivial_ssa_triple, ee_dw0_triple):
    assert trivial_sa_triple.is_trivial and trivial_ssa_triple.is_trivial
    assert not ee_dw0_triple.is_trivial
