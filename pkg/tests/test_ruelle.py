# -*- coding: utf-8 -*-
import cmath
import math

import numpy as np
import pytest
from scipy.special import comb

from ruelle.errors.analysis import IndexOutOfRange, SpectrumFormatError
from ruelle.schemas.spectrum import GeodesicEntry, LengthSpectrum, SyntheticSpectrum
from ruelle.traceformula.funceq import chi_poly
from ruelle.zeta.ruelle import (
    funceq_residual, holonomy_determinant, log_s_j, ruelle_value, s_j, sigma_trace, weight_alpha
)

SPECTRUM_CSV = '''\
n,r,cutoff
1,1,10
# l0,k,theta,re_tr,im_tr
1.0,2,0.0,1.0,0.0
1.0,1,0.0,1.0,0.0
'''


def test_sigma_trace_three_manifold():
    theta = 0.8
    assert sigma_trace([theta], 0) == pytest.approx(1.0)
    assert sigma_trace([theta], 1) == pytest.approx(2 * math.cos(theta))
    assert sigma_trace([theta], 2) == pytest.approx(1.0)
    with pytest.raises(IndexOutOfRange):
        sigma_trace([theta], 3)


def test_sigma_trace_symmetry(rng):
    thetas = list(rng.uniform(0, 2 * np.pi, size=3))
    for j in range(7):
        assert sigma_trace(thetas, j) == pytest.approx(sigma_trace(thetas, 6 - j), abs=1e-12)
    for j in range(5):
        assert sigma_trace([0.0, 0.0], j) == pytest.approx(comb(4, j))


def test_weight_alpha():
    e = GeodesicEntry(l0=1.0, k=1, thetas=[0.0], trace_rho=1.0)
    assert holonomy_determinant(e) == pytest.approx((1 - math.exp(-1)) ** 2)
    assert weight_alpha(e, 0) == pytest.approx(1 / (1 - math.exp(-1)) ** 2)
    assert weight_alpha(e, 0) == pytest.approx(2.502650, abs=1e-6)
    assert weight_alpha(GeodesicEntry(l0=1.0, thetas=[0.3], trace_rho=0), 1) == 0


def test_weight_symmetry(synthetic_spectrum):
    for e in synthetic_spectrum.entries:
        assert holonomy_determinant(e) > 0
        assert weight_alpha(e, 0) == pytest.approx(weight_alpha(e, 2))


def test_s_j_single_entry():
    e = GeodesicEntry(l0=1.0, k=1, thetas=[0.0], trace_rho=1.0)
    spec = LengthSpectrum(n=1, r=1, entries=[e])
    assert s_j(spec, 0, 3) == pytest.approx(weight_alpha(e, 0) * math.exp(-3))
    assert s_j(spec, 0, 2.2) == pytest.approx(s_j(spec, 2, 2.2))
    assert s_j(LengthSpectrum(), 1, 1.0) == 0


def test_factorization_matches_direct_sum(synthetic_spectrum):
    for z in (2.0, 1.5 + 0.7j, 3.0 - 2.0j):
        factor = ruelle_value(synthetic_spectrum, z, 'factor')
        direct = ruelle_value(synthetic_spectrum, z, 'direct')
        assert abs(factor - direct) < 1e-12


def test_direct_path_is_the_euler_product():
    '''Σ_k ξ^k/k·e^{−zkl} = −log(1 − ξe^{−zl}) for a full tower of powers'''
    xi, l0, z = -1.0, 1.2, 2.5
    entries = [GeodesicEntry(l0=l0, k=k, thetas=[0.0], trace_rho=xi ** k) for k in range(1, 60)]
    spec = LengthSpectrum(n=1, r=1, entries=entries)
    assert ruelle_value(spec, z, 'direct') == pytest.approx(-cmath.log(1 - xi * cmath.exp(-z * l0)), abs=1e-14)


def test_empty_spectrum():
    spec = LengthSpectrum(n=1, r=1)
    assert ruelle_value(spec, 1.0) == 0
    assert funceq_residual(spec, chi_poly(1, 1, 0.0), 0.7) == 0


def test_real_traces_give_real_values(five_entry_spectrum):
    assert abs(ruelle_value(five_entry_spectrum, 2.0).imag) < 1e-15


def test_unknown_path(five_entry_spectrum):
    with pytest.raises(ValueError):
        ruelle_value(five_entry_spectrum, 2.0, 'euler')


def test_funceq_residual(synthetic_spectrum):
    report = chi_poly(1, 1, 0.0)
    z = 0.3 + 0.1j
    residual = funceq_residual(synthetic_spectrum, report, z)
    expected = ruelle_value(synthetic_spectrum, z) - ruelle_value(synthetic_spectrum, -z)
    assert residual == pytest.approx(expected, abs=1e-12)
    report = chi_poly(1, 1, 2.0298832128, 0.3)
    assert funceq_residual(synthetic_spectrum, report, -z) == pytest.approx(
        -funceq_residual(synthetic_spectrum, report, z), rel=1e-9
    )


def test_monotone_truncation():
    entries = [GeodesicEntry(l0=1.0 + 0.1 * i, thetas=[0.4 * i], trace_rho=1.0) for i in range(8)]
    values = [
        abs(log_s_j(LengthSpectrum(n=1, r=1, entries=entries[:count]), 0, 2.0)) for count in range(1, 9)
    ]
    assert values == sorted(values)


def test_parse_spectrum():
    spec = LengthSpectrum.parse(SPECTRUM_CSV)
    assert (spec.n, spec.r, spec.cutoff) == (1, 1, 10.0)
    assert [e.length for e in spec.entries] == [1.0, 2.0]
    no_header = LengthSpectrum.parse('1,1,inf\n1.0,1,0.5,0.0,1.0\n')
    assert no_header.entries[0].trace_rho == 1j


@pytest.mark.parametrize('text', [
    '',
    'n,r,cutoff\n',
    '1,1\n',
    '1,1,10\n1.0,1,0.0,1.0\n',
    '1,1,10\n-1.0,1,0.0,1.0,0.0\n',
    '1,1,10\n1.0,1,0.0,2.0,0.0\n',
    '1,1,1.5\n1.0,2,0.0,1.0,0.0\n',
    '1,1,10\n1.0,one,0.0,1.0,0.0\n',
])
def test_malformed_spectrum(text):
    with pytest.raises(SpectrumFormatError):
        LengthSpectrum.parse(text)


def test_synthetic_spectrum(laplace_spectrum):
    assert laplace_spectrum.degree(2) == []
    assert SyntheticSpectrum(eigenvalues={0: [0.0, 1.0, 0.0]}).kernel_dim(0) == 2
    with pytest.raises(SpectrumFormatError):
        SyntheticSpectrum(eigenvalues={0: [-1.0]})
