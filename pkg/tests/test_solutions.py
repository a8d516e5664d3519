import math

import numpy as np
import pytest

from matlin import BranchPointError, ShapeError, norm2
from seed import Branch, SeedPotential, SystemKind
from solutions import (
    column_split_fundamental,
    dynamical_column,
    dynamical_solution,
    normalized_fundamental,
    seed_data,
    seed_fundamental,
    transformed_fundamental,
    zeta_branch,
)
from verify.oracle import rk4_integrate, seed_system, transformed_system
from tests.helpers import rel_err

SA = SystemKind.self_adjoint()
SKEW = SystemKind.skew()
UNIT = SeedPotential(a=1.0, c=0.0)


@pytest.mark.parametrize("kind, seed, z, expected", [
    (SA, UNIT, 2j, 1j * math.sqrt(5.0)),
    (SKEW, SeedPotential(a=1j, c=0.0), 3j, 2j * math.sqrt(2.0)),
    (SA, UNIT, 2.0, math.sqrt(3.0)),
    (SA, UNIT, -2.0, -math.sqrt(3.0)),
    (SKEW, UNIT, 0.0, 1.0),
])
def test_zeta_values(kind, seed, z, expected):
    assert abs(zeta_branch(z, seed, kind) - expected) <= 1e-14
    assert abs(zeta_branch(z, seed, kind, Branch.MINUS) + expected) <= 1e-14


def test_zeta_upper_half_plane():
    for z in (0.5 + 0.1j, -3.0 + 2.0j, 10j):
        assert zeta_branch(z, UNIT, SA).imag > 0
        assert zeta_branch(z, UNIT, SKEW).imag > 0


def test_zeta_branch_point():
    with pytest.raises(BranchPointError):
        zeta_branch(1.0, UNIT, SA)


@pytest.mark.parametrize("kind", [SA, SKEW])
def test_z_matrix_determinant(kind):
    seed = SeedPotential(a=0.7 - 0.2j, c=0.4)
    data = seed_data(seed, kind, 1.5 + 2.0j)
    expected = -2 * seed.a * data.zeta if kind.is_self_adjoint else 2j * seed.a * data.zeta
    assert abs(data.determinant - expected) <= 1e-12 * abs(expected)


def test_seed_fundamental_at_origin():
    seed = SeedPotential(a=1.5, c=0.3)
    data = seed_data(seed, SA, 2.0 + 1.0j)
    assert np.allclose(seed_fundamental(seed, SA, 0.0, 2.0 + 1.0j), data.Z, atol=0)


@pytest.mark.parametrize("kind, seed, z", [
    (SA, SeedPotential(a=1.5, c=0.3), 2.0 + 1.0j),
    (SKEW, SeedPotential(a=0.5 + 0.5j, c=-0.2), 1.0 + 2.0j),
])
def test_seed_fundamental_solves_seed_system(kind, seed, z):
    system = seed_system(kind, seed, z)
    h = 1e-5
    for x in (-0.7, 0.0, 1.3):
        fd = (seed_fundamental(seed, kind, x + h, z) - seed_fundamental(seed, kind, x - h, z)) / (2 * h)
        rhs = system.rhs(x, seed_fundamental(seed, kind, x, z))
        assert norm2(fd - rhs) <= 1e-7 * max(1.0, norm2(rhs))


def test_normalized_fundamental_at_origin(ee_dw1_triple):
    assert np.allclose(normalized_fundamental(ee_dw1_triple, 0.0, 5j), np.eye(2), atol=0)


def test_transformed_fundamental_against_rk4(ee_dw0_triple):
    z = 5j
    start = transformed_fundamental(ee_dw0_triple, 0.0, z)
    track = rk4_integrate(transformed_system(ee_dw0_triple, z), start, [0.0, 1.0])
    assert rel_err(track[-1], transformed_fundamental(ee_dw0_triple, 1.0, z)) <= 1e-6


def test_normalized_fundamental_against_rk4(ee_dw1_triple):
    z = 5j
    track = rk4_integrate(transformed_system(ee_dw1_triple, z), np.eye(2), [0.0, 0.5])
    assert rel_err(track[-1], normalized_fundamental(ee_dw1_triple, 0.5, z)) <= 1e-6


def test_column_split_matches_full_product(sa_scalar_triple):
    z = 1.0 + 3.0j
    top, bottom = np.array([[0.3 - 0.1j]]), np.array([[1e-3]])
    split = column_split_fundamental(sa_scalar_triple, 0.8, z, top, bottom)
    full = transformed_fundamental(sa_scalar_triple, 0.8, z) @ np.vstack([top, bottom])
    assert rel_err(split, full) <= 1e-12


def test_dynamical_modulus_is_constant_in_xi(ee_dw0_triple):
    reference = np.abs(dynamical_solution(ee_dw0_triple, 0.4, 0.0))
    for xi in np.linspace(-1.0, 1.0, 7):
        assert np.allclose(np.abs(dynamical_solution(ee_dw0_triple, 0.4, float(xi))), reference, rtol=1e-12)


def test_trivial_dynamical_solution_vanishes(trivial_sa_triple):
    assert not np.any(dynamical_solution(trivial_sa_triple, 0.5, 0.3))


def test_dynamical_column_shape(ee_dw1_triple):
    assert dynamical_column(ee_dw1_triple, 0.2, 0.1, [1.0, -1.0]).shape == (2, 1)
    with pytest.raises(ShapeError):
        dynamical_column(ee_dw1_triple, 0.2, 0.1, [1.0, 2.0, 3.0])


@pytest.mark.parametrize("kind", [SA, SKEW])
def test_branch_flip_swaps_columns(kind):
    seed = SeedPotential(a=0.8, c=0.1)
    z = 0.5 + 1.5j
    plus = seed_data(seed, kind, z, Branch.PLUS).Z
    minus = seed_data(seed, kind, z, Branch.MINUS).Z
    assert np.allclose(minus, plus[:, ::-1], atol=1e-15)
    system = seed_system(kind, seed, z)
    h = 1e-5
    fd = (seed_fundamental(seed, kind, 0.4 + h, z, Branch.MINUS)
          - seed_fundamental(seed, kind, 0.4 - h, z, Branch.MINUS)) / (2 * h)
    rhs = system.rhs(0.4, seed_fundamental(seed, kind, 0.4, z, Branch.MINUS))
    assert norm2(fd - rhs) <= 1e-7 * max(1.0, norm2(rhs))
