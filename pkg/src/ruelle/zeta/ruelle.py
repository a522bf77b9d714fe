# -*- coding: utf-8 -*-
'''Truncated Ruelle L-function R_X(z, ρ) from a length spectrum

    R_X(z, ρ) = Π_{γ₀ prime} det[1 − ρ(γ₀)·e^{−z·l(γ₀)}]^{−1}
              = Π_{j=0}^{2n} S_j(z + j)^{(−1)^{j+1}}

with log S_j(z) = −Σ_γ α_j(γ)/l(γ)·e^{−z·l(γ)} summed over all hyperbolic
classes γ (primitives and their powers, each listed explicitly).
'''
import cmath
import logging
import math
from typing import Iterable, Literal, Sequence

import numpy as np

from ..errors.analysis import IndexOutOfRange
from ..schemas.reports import FuncEqReport
from ..schemas.spectrum import GeodesicEntry, LengthSpectrum
from ..traceformula.funceq import funceq_exponent


log = logging.getLogger('RuelleZeta')

Path = Literal['factor', 'direct']


def _fsum(values: Iterable[complex]) -> complex:
    values = list(values)
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def sigma_trace(thetas: Sequence[float], j: int) -> float:
    '''Tr σ_j(m_γ), the j-th elementary symmetric polynomial of {e^{±iθ_i}}

    Args:
        thetas (Sequence[float]): n holonomy angles.
        j (int): 0 ≤ j ≤ 2n.

    Raises:
        IndexOutOfRange: If j is out of range.

    Returns:
        float: Tr σ_j(m_γ)
    '''
    size = 2 * len(thetas)
    if not 0 <= j <= size:
        raise IndexOutOfRange(f'Index j = {j} outside 0..{size}')
    eigenvalues = np.exp(1j * np.concatenate([np.asarray(thetas, float), -np.asarray(thetas, float)]))
    coefficients = np.poly(eigenvalues) if size else np.array([1.0])
    return float(((-1) ** j * coefficients[j]).real)


def holonomy_determinant(e: GeodesicEntry) -> float:
    '''Δ(γ) = det(I − e^{−l}·m_γ) = Π_i (1 − 2e^{−l}cos θ_i + e^{−2l})'''
    x = math.exp(-e.length)
    return math.prod(1.0 - 2.0 * x * math.cos(theta) + x * x for theta in e.thetas)


def weight_alpha(e: GeodesicEntry, j: int) -> complex:
    '''α_j(γ) = Tr ρ(γ)·Tr σ_j(m_γ)·l(γ₀)/Δ(γ)

    Args:
        e (GeodesicEntry): Hyperbolic class.
        j (int): 0 ≤ j ≤ 2n.

    Returns:
        complex: α_j(γ)
    '''
    return e.trace_rho * sigma_trace(e.thetas, j) * e.l0 / holonomy_determinant(e)


def _check_j(spec: LengthSpectrum, j: int):
    if not 0 <= j <= 2 * spec.n:
        raise IndexOutOfRange(f'Index j = {j} outside 0..{2 * spec.n}')


def s_j(spec: LengthSpectrum, j: int, z: complex) -> complex:
    '''s_j(z) = Σ_γ α_j(γ)·e^{−z·l(γ)}

    Args:
        spec (LengthSpectrum): Truncated spectrum.
        j (int): 0 ≤ j ≤ 2n.
        z (complex): Evaluation point.

    Returns:
        complex: Truncated sum, 0 for an empty spectrum
    '''
    _check_j(spec, j)
    return _fsum(weight_alpha(e, j) * cmath.exp(-z * e.length) for e in spec.entries)


def log_s_j(spec: LengthSpectrum, j: int, z: complex) -> complex:
    '''log S_j(z) = −Σ_γ α_j(γ)/l(γ)·e^{−z·l(γ)}'''
    _check_j(spec, j)
    return -_fsum(weight_alpha(e, j) / e.length * cmath.exp(-z * e.length) for e in spec.entries)


def ruelle_value(spec: LengthSpectrum, z: complex, path: Path = 'factor') -> complex:
    '''log R_X(z, ρ) on a truncated spectrum

    Args:
        spec (LengthSpectrum): Spectrum with every power γ₀^k listed.
        z (complex): Evaluation point.
        path (str, optional): ``factor`` sums Σ_j (−1)^{j+1} log S_j(z + j),
            ``direct`` sums Σ Tr ρ(γ)/k·e^{−z·l(γ)}. Defaults to ``factor``.

    Raises:
        ValueError: If the path is unknown.

    Returns:
        complex: log R, 0 for an empty spectrum
    '''
    match path:
        case 'factor':
            return _fsum(
                (-1) ** (j + 1) * log_s_j(spec, j, z + j) for j in range(2 * spec.n + 1)
            )
        case 'direct':
            return _fsum(e.trace_rho / e.k * cmath.exp(-z * e.length) for e in spec.entries)
        case other:
            raise ValueError(f'Unknown evaluation path {other!r}')


def funceq_residual(spec: LengthSpectrum, report: FuncEqReport, z: complex, path: Path = 'factor') -> complex:
    '''log R(z) − log R(−z) − [prefactor·vol·X(z) + 4·Σ(−1)^j·δ·z]

    Nonzero on truncated spectra; a diagnostic, not an assertion.

    Args:
        spec (LengthSpectrum): Spectrum.
        report (FuncEqReport): Output of `chi_poly` for the same n and r.
        z (complex): Evaluation point.
        path (str, optional): Evaluation path of log R.

    Returns:
        complex: Residual, odd in z
    '''
    if report.n != spec.n:
        log.warning('Functional equation for n = %d applied to a spectrum with n = %d', report.n, spec.n)
    residual = ruelle_value(spec, z, path) - ruelle_value(spec, -z, path) - funceq_exponent(report, z)
    log.debug('Functional-equation residual at %s: %s', z, residual)
    return residual
