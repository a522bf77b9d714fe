# -*- coding: utf-8 -*-
import cmath
import math

import mpmath
import numpy as np
import pytest
from scipy.integrate import quad

from ruelle.errors.analysis import DegenerateShape, EmptyShapeList, NegativeVolume
from ruelle.schemas.shapes import ShapeList
from ruelle.traceformula.funceq import c1
from ruelle.volume.dilog import bloch_wigner, dilog
from ruelle.volume.volume import l2_torsion_limit, l2_torsion_log, manifold_volume, tetra_volume

FIGURE_EIGHT_VOLUME = 2.0298832128193


def test_special_values():
    assert dilog(1) == pytest.approx(math.pi ** 2 / 6, abs=1e-12)
    assert dilog(-1) == pytest.approx(-math.pi ** 2 / 12, abs=1e-12)
    assert dilog(0.5) == pytest.approx(math.pi ** 2 / 12 - math.log(2) ** 2 / 2, abs=1e-14)
    assert dilog(0) == 0


def test_matches_mpmath(rng):
    points = rng.normal(scale=2.0, size=200) + 1j * rng.normal(scale=2.0, size=200)
    points = np.concatenate([points, np.exp(1j * rng.uniform(-np.pi, np.pi, size=50))])
    for z in points:
        assert dilog(z) == pytest.approx(complex(mpmath.polylog(2, complex(z))), abs=1e-12)


def dilog_by_quadrature(z: complex) -> complex:
    '''−∫₀¹ log(1 − tz)/t dt along the segment from 0 to z'''
    real, _ = quad(lambda t: -(cmath.log(1 - t * z) / t).real, 0, 1, epsabs=1e-14, epsrel=1e-13)
    imag, _ = quad(lambda t: -(cmath.log(1 - t * z) / t).imag, 0, 1, epsabs=1e-14, epsrel=1e-13)
    return complex(real, imag)


def test_matches_quadrature(rng):
    radii = rng.uniform(0, 0.9, size=40)
    angles = rng.uniform(-np.pi, np.pi, size=40)
    for z in radii * np.exp(1j * angles):
        assert dilog(z) == pytest.approx(dilog_by_quadrature(complex(z)), abs=1e-11)


def test_branch_cut_from_below():
    for x in (1.5, 3.0, 10.0):
        assert dilog(x).imag == pytest.approx(-math.pi * math.log(x), abs=1e-12)


def test_bloch_wigner_maximum():
    assert bloch_wigner(cmath.exp(1j * math.pi / 3)) == pytest.approx(1.0149416064096536, abs=1e-12)


def test_bloch_wigner_symmetries(rng):
    for _ in range(50):
        z = complex(rng.normal(), rng.normal())
        assert bloch_wigner(z.conjugate()) == pytest.approx(-bloch_wigner(z), abs=1e-12)
        assert bloch_wigner(1 - z) == pytest.approx(-bloch_wigner(z), abs=1e-12)
        assert bloch_wigner(1 / z) == pytest.approx(-bloch_wigner(z), abs=1e-12)
    assert bloch_wigner(2.5) == 0


def test_five_term_relation(rng):
    for _ in range(100):
        x = complex(rng.normal(), rng.normal())
        y = complex(rng.normal(), rng.normal())
        if min(abs(x * y - 1), abs(x), abs(y), abs(1 - x), abs(1 - y)) < 1e-3:
            continue
        total = (
            bloch_wigner(x) + bloch_wigner(y) + bloch_wigner((1 - x) / (1 - x * y))
            + bloch_wigner(1 - x * y) + bloch_wigner((1 - y) / (1 - x * y))
        )
        assert abs(total) < 1e-10


def test_singular_points_warn():
    with pytest.warns(UserWarning):
        assert bloch_wigner(0) == 0
    with pytest.warns(UserWarning):
        assert bloch_wigner(1) == 0


def test_figure_eight_volume():
    shapes = ShapeList(shapes=[cmath.exp(1j * math.pi / 3)] * 2)
    assert manifold_volume(shapes) == pytest.approx(FIGURE_EIGHT_VOLUME, abs=1e-8)
    assert manifold_volume(ShapeList.parse('0.5,0.8660254037844386')) == pytest.approx(FIGURE_EIGHT_VOLUME / 2, abs=1e-8)


def test_degenerate_shapes():
    with pytest.warns(UserWarning):
        assert tetra_volume(2.0) == 0
    with pytest.raises(DegenerateShape):
        ShapeList.parse('0.5,0.5;0.5,-0.5')
    with pytest.raises(EmptyShapeList):
        ShapeList.parse('')


def test_l2_torsion():
    assert l2_torsion_log(1, FIGURE_EIGHT_VOLUME) == pytest.approx(0.1076886, abs=1e-7)
    assert l2_torsion_log(3, 0.0) == 0
    with pytest.raises(NegativeVolume):
        l2_torsion_log(1, -1.0)


def test_l2_limit_is_c1(rng):
    for _ in range(20):
        r, vol, delta = int(rng.integers(1, 6)), float(rng.uniform(0, 20)), float(rng.normal())
        assert -18 * l2_torsion_log(r, vol) == pytest.approx(c1(1, r, vol, delta), abs=1e-12)
        assert l2_torsion_limit(r, vol) == pytest.approx(-3 * r * vol / math.pi, abs=1e-12)
