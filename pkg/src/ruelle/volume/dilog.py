# -*- coding: utf-8 -*-
'''Dilogarithm Li₂ and the Bloch–Wigner function D

Principal branch with cut [1, ∞); on the cut Li₂ takes its limit from below,
Im Li₂(x) = −π·log x for x > 1.
'''
import cmath
import logging
import math
import warnings
from functools import lru_cache

from scipy.special import bernoulli, factorial


log = logging.getLogger('Volume')

ZETA2 = math.pi ** 2 / 6
SERIES_TERMS = 40


@lru_cache()
def _bernoulli_weights() -> tuple[float, ...]:
    '''B_k/(k+1)! with B_1 = −½'''
    numbers = bernoulli(SERIES_TERMS)
    return tuple(float(numbers[k] / factorial(k + 1, exact=True)) for k in range(SERIES_TERMS + 1))


def _power_series(z: complex) -> complex:
    '''Σ z^k/k² for |z| ≤ ½'''
    total, power, k = 0j, z, 1
    while abs(power) > 1e-17 * k * k:
        total += power / (k * k)
        k += 1
        power *= z
    return total


def _bernoulli_series(z: complex) -> complex:
    '''Σ B_k·u^{k+1}/(k+1)!, u = −log(1 − z), for |z| ≤ 1 and Re z ≤ ½'''
    u = -cmath.log(1 - z)
    total, power = 0j, u
    for weight in _bernoulli_weights():
        total += weight * power
        power *= u
    return total


def dilog(z: complex) -> complex:
    '''Li₂(z) = Σ_{k≥1} z^k/k²

    The defining series is used for |z| ≤ ½ and the Bernoulli series in
    −log(1 − z) on the rest of the unit disc left of Re z = ½; other points
    are mapped there by inversion z ↦ 1/z and reflection z ↦ 1 − z.

    Args:
        z (complex): Argument.

    Returns:
        complex: Li₂(z) on the principal branch
    '''
    z = complex(z)
    if z == 0:
        return 0j
    if z == 1:
        return complex(ZETA2)
    if abs(z) > 1:
        minus = -z
        if minus.imag == 0:
            minus = complex(minus.real, 0.0)
        return -dilog(1 / z) - ZETA2 - 0.5 * cmath.log(minus) ** 2
    if z.real > 0.5:
        return ZETA2 - cmath.log(z) * cmath.log(1 - z) - dilog(1 - z)
    if abs(z) <= 0.5:
        return _power_series(z)
    return _bernoulli_series(z)


def bloch_wigner(z: complex) -> float:
    '''Bloch–Wigner function D(z) = Im Li₂(z) + arg(1 − z)·log|z|

    Args:
        z (complex): Argument.

    Returns:
        float: D(z), 0 on the real line and, with a warning, at 0 and 1
    '''
    z = complex(z)
    if z == 0 or z == 1:
        warnings.warn(f'D is singular at {z.real:g}, returning the continuous value 0', UserWarning)
        return 0.0
    if z.imag == 0:
        return 0.0
    return dilog(z).imag + cmath.phase(1 - z) * math.log(abs(z))
