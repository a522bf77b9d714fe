# -*- coding: utf-8 -*-
import math

import mpmath
import numpy as np
import pytest

from ruelle.epstein.epstein import (
    SPHERE_AREA, delta_constant, direct_sum, epstein_value, tau_nu, truncation_radius
)
from ruelle.errors.analysis import (
    DegenerateLattice, LatticeFormatError, NonconvergentTheta, TrivialCharacter, UnsupportedDimension
)
from ruelle.schemas.lattice import CharLattice, CuspData, parse_lattices

LATTICES = '''\
# one cusp, square cross-section, two characters
covolume: 1
basis: 1 0 0 1
alpha: 0.5 0.5
alpha: 0.5 0
'''


@pytest.fixture
def checkerboard() -> CharLattice:
    return CharLattice(basis=np.eye(2), alpha=(0.5, 0.5))


def checkerboard_closed_form(s: complex) -> complex:
    '''Σ'(−1)^{m+n}(m² + n²)^{−w} = −4·β(w)·η(w), w = s + 1'''
    w = mpmath.mpc(s) + 1
    return complex(-4 * mpmath.dirichlet(w, [0, 1, 0, -1]) * mpmath.altzeta(w))


def random_lattices(rng: np.random.Generator, count: int) -> list[CharLattice]:
    return [
        CharLattice(
            basis=np.eye(2) + 0.3 * rng.normal(size=(2, 2)),
            alpha=tuple(rng.uniform(0.1, 0.9, size=2)),
        )
        for _ in range(count)
    ]


@pytest.mark.parametrize('s', [0, 1, 1.5, 0.3 + 2j, -0.5])
def test_checkerboard_closed_form(checkerboard, s):
    assert epstein_value(checkerboard, s) == pytest.approx(checkerboard_closed_form(s), rel=1e-10)


def test_checkerboard_at_zero(checkerboard):
    assert epstein_value(checkerboard, 0) == pytest.approx(-math.pi * math.log(2), rel=1e-12)


def test_convergent_region_matches_direct_sum(rng, checkerboard):
    assert epstein_value(checkerboard, 1.5) == pytest.approx(direct_sum(checkerboard, 1.5), abs=1e-7)
    for lattice in random_lattices(rng, 10):
        assert epstein_value(lattice, 1.5) == pytest.approx(direct_sum(lattice, 1.5), abs=1e-7)


def test_truncation_stability(rng):
    radius = truncation_radius()
    for lattice in random_lattices(rng, 3):
        assert epstein_value(lattice, 0, radius) == pytest.approx(epstein_value(lattice, 0, radius + 2), abs=1e-10)


@pytest.mark.parametrize('s', [re + im for re in (-0.5, 0, 0.5) for im in (0, 0.5j, -0.5j)])
def test_entire_grid_is_stable(rng, s):
    radius = truncation_radius()
    for lattice in random_lattices(rng, 2):
        value = epstein_value(lattice, s, radius)
        assert np.isfinite(value)
        assert value == pytest.approx(epstein_value(lattice, s, radius + 2), abs=1e-10)


def test_conjugate_character(rng):
    s = 0.4 + 0.9j
    for lattice in random_lattices(rng, 3):
        value = epstein_value(lattice, s)
        assert epstein_value(lattice.conjugate(), s.conjugate()) == pytest.approx(value.conjugate(), rel=1e-10)


def test_value_at_pole_cancellation(checkerboard):
    assert epstein_value(checkerboard, -1) == -1


def test_tau_and_delta():
    cusps = parse_lattices(LATTICES)
    assert len(cusps) == 1 and len(cusps[0].lattices) == 2
    tau = tau_nu(cusps[0])
    expected = sum(epstein_value(lattice, 0) for lattice in cusps[0].lattices)
    assert tau == pytest.approx(expected)
    assert delta_constant(cusps) == pytest.approx(tau / SPHERE_AREA)
    assert delta_constant([]) == 0


def test_scaled_cusp_scales_covolume():
    cusp = CuspData(lattices=[CharLattice(basis=2 * np.eye(2), alpha=(0.5, 0.5))], covolume=4.0)
    unit = epstein_value(CharLattice(basis=np.eye(2), alpha=(0.5, 0.5)), 0)
    assert tau_nu(cusp) == pytest.approx(unit / 4)


def test_errors(checkerboard):
    with pytest.raises(UnsupportedDimension):
        epstein_value(checkerboard, 0, n=2)
    with pytest.raises(NonconvergentTheta):
        epstein_value(checkerboard, 0, radius=5000)


@pytest.mark.parametrize('basis,alpha,error', [
    ([[1, 2], [2, 4]], (0.5, 0.5), DegenerateLattice),
    (np.eye(3), (0.5, 0.5), LatticeFormatError),
    (np.eye(2), (0.0, 0.0), TrivialCharacter),
    (np.eye(2), (1.0, 2.0), TrivialCharacter),
])
def test_lattice_validation(basis, alpha, error):
    with pytest.raises(error):
        CharLattice(basis=basis, alpha=alpha)


def test_alpha_reduced_mod_one():
    assert CharLattice(basis=np.eye(2), alpha=(1.25, -0.5)).alpha == (0.25, 0.5)


@pytest.mark.parametrize('text', [
    'covolume: 2\nbasis: 1 0 0 1\nalpha: 0.5 0.5\n',
    'covolume: 1\n',
    'alpha: 0.5 0.5\n',
    'basis: 1 0 0\n',
    'volume: 1\n',
    'covolume one\n',
    'covolume: x\n',
])
def test_malformed_lattices(text):
    with pytest.raises(LatticeFormatError):
        parse_lattices(text)
