# -*- coding: utf-8 -*-
'''Laplace transforms L(f)(z) = 2z·∫₀^∞ e^{−tz²} f(t) dt of trace-formula terms

Closed forms are exact (sympy); the quadrature companions validate them at
real z > 0 and continue divergent power integrals by subtracting Taylor terms.
'''
import logging
import math
from typing import Callable

import sympy
from scipy.integrate import quad
from scipy.special import gamma as gamma_fn

from ..errors.analysis import IndexOutOfRange, QuadratureFailure
from ..schemas.spectrum import LengthSpectrum, SyntheticSpectrum
from ..settings import get_settings
from ..zeta.ruelle import s_j, weight_alpha
from .funceq import Z
from .plancherel import gamma_coeffs, plancherel_constant


log = logging.getLogger('TraceFormula')

U_RANGE = 40.0


def adaptive_quad(f: Callable[[float], float], a: float, b: float, rel: float = 1e-11,
          points: tuple[float, ...] | None = None) -> float:
    '''Adaptive Gauss–Kronrod quadrature raising `QuadratureFailure`'''
    abs_tol = get_settings().quad_abs_tol
    result = quad(f, a, b, epsabs=abs_tol, epsrel=rel, limit=400, points=points, full_output=1)
    value, error = result[0], result[1]
    if len(result) > 3 and error > 100 * max(abs_tol, rel * abs(value)):
        e = QuadratureFailure(f'Quadrature on [{a}, {b}] stopped at error {error:.3e}: {result[3]}')
        log.error(e)
        raise e
    return value


def c_j(n: int, j: int) -> int:
    '''c_j = |n − j|'''
    return abs(n - j)


def kronecker_factor(n: int, j: int) -> int:
    '''1 + δ_{j,n}'''
    return 2 if j == n else 1


def _fold(n: int, j: int) -> int:
    if n < 1 or not 0 <= j <= 2 * n:
        raise IndexOutOfRange(f'Index j = {j} outside 0..{2 * n}')
    return min(j, 2 * n - j)


def laplace_gaussian_moment(k: int, z):
    '''L(∫ e^{−tλ²}·λ^{2k} dλ)(z) = (−1)^k·2π·z^{2k}, continued to the plane

    Args:
        k (int): k ≥ 0.
        z: Number or sympy expression.

    Returns:
        Same kind as z: (−1)^k·2π·z^{2k}
    '''
    if k < 0:
        raise IndexOutOfRange(f'k must be nonnegative, got {k}')
    if isinstance(z, sympy.Basic):
        return (-1) ** k * 2 * sympy.pi * z ** (2 * k)
    return (-1) ** k * 2 * math.pi * z ** (2 * k)


def _exp_remainder(x: float, order: int) -> float:
    '''e^{−x} − Σ_{m ≤ order} (−x)^m/m! without cancellation for small x'''
    if x > 1.0:
        return math.exp(-x) - sum((-x) ** m / math.factorial(m) for m in range(order + 1))
    term = (-x) ** (order + 1) / math.factorial(order + 1)
    total, m = 0.0, order + 1
    while abs(term) > 1e-18 * max(abs(total), 1e-300):
        total += term
        m += 1
        term *= -x / m
    return total


def continued_power_integral(s: float, a: float) -> float:
    '''∫₀^∞ e^{−a·t}·t^{s−1} dt continued to s ∉ {0, −1, …} by quadrature

    Terms m < 1 − s of the Taylor series of e^{−at} are subtracted on (0, 1]
    and added back as (−a)^m/(m!·(s + m)). Equals Γ(s)·a^{−s}.
    '''
    order = max(0, math.ceil(-s)) if s <= 0 else -1
    head = adaptive_quad(lambda t: _exp_remainder(a * t, order) * t ** (s - 1), 0.0, 1.0)
    polar = sum((-a) ** m / (math.factorial(m) * (s + m)) for m in range(order + 1))
    tail = adaptive_quad(lambda t: math.exp(-a * t) * t ** (s - 1), 1.0, math.inf)
    return head + polar + tail


def laplace_gaussian_moment_quad(k: int, z: float) -> float:
    '''Quadrature companion of `laplace_gaussian_moment` at real z > 0

    Uses ∫ e^{−tλ²}λ^{2k} dλ = 2^{−k}(2k−1)!!·√π·t^{−½−k}.
    '''
    if z <= 0:
        raise ValueError('Quadrature mode needs z > 0')
    moment = 2.0 ** (-k) * float(sympy.factorial2(2 * k - 1)) * math.sqrt(math.pi)
    return 2 * z * moment * continued_power_integral(0.5 - k, z * z)


def identity_term(n: int, r: int, vol, j: int, z=Z) -> sympy.Expr:
    '''Continued Laplace transform L(e^{t·c_j²}·i_j)(z) of the identity term

        (1 + δ_{j,n})·4^{1−n}·r·C(2n, j)/(2(2n−1)!!²·π)·vol·Σ_k (−1)^k γ_{j,k} z^{2k}

    Args:
        n (int): d = 2n + 1.
        r (int): Rank of ρ.
        vol: vol(X), number or symbol.
        j (int): 0 ≤ j ≤ 2n, folded by i_j = i_{2n−j}.
        z (optional): Variable or value. Defaults to `Z`.

    Returns:
        sympy.Expr: Even polynomial in z
    '''
    folded = _fold(n, j)
    row = gamma_coeffs(n).row(folded)
    polynomial = sum((-1) ** k * g * z ** (2 * k) for k, g in enumerate(row))
    scale = kronecker_factor(n, folded) * sympy.Rational(r, 2) * plancherel_constant(n, folded) / sympy.pi
    return sympy.expand(scale * sympy.sympify(vol) * polynomial)


def identity_orbital(n: int, r: int, vol: float, j: int, t: float) -> float:
    '''Identity orbital integral i_j(t), with the doubled j = n term

        i_j(t) = (1 + δ_{j,n})·r·vol/(4π)·∫ e^{−t(λ² + c_j²)} P_j(λ) dλ
    '''
    folded = _fold(n, j)
    row = gamma_coeffs(n).row(folded)
    moments = sum(
        float(g) * 2.0 ** (-k) * float(sympy.factorial2(2 * k - 1)) * math.sqrt(math.pi) * t ** (-0.5 - k)
        for k, g in enumerate(row)
    )
    scale = kronecker_factor(n, folded) * r * vol / (4 * math.pi) * float(plancherel_constant(n, folded)) / math.pi
    return scale * math.exp(-t * c_j(n, folded) ** 2) * moments


def unipotent_term(n: int, delta, j: int):
    '''Continued L(e^{t·c_j²}·u_j)(z) = (1 + δ_{j,n})·δ(X, ρ), a constant'''
    return kronecker_factor(n, _fold(n, j)) * delta


def delta_transform(spectrum: SyntheticSpectrum, n: int, j: int, z=Z) -> sympy.Expr:
    '''L(e^{t·c_j²}·δ_j)(z) for a discrete spectrum

        Σ_{k=0}^{j} (−1)^{j−k} Σ_l 2z/(z² − c_j² + σ_k(l))

    Eigenvalues enter as exact rationals.

    Args:
        spectrum (SyntheticSpectrum): σ_k(l) per degree k.
        n (int): d = 2n + 1.
        j (int): 0 ≤ j ≤ n.
        z (optional): Variable. Defaults to `Z`.

    Returns:
        sympy.Expr: Rational function of z
    '''
    if n < 1 or not 0 <= j <= n:
        raise IndexOutOfRange(f'Index j = {j} outside 0..{n}')
    shift = c_j(n, j) ** 2
    total = sympy.Integer(0)
    for k in range(j + 1):
        for sigma in spectrum.degree(k):
            total += (-1) ** (j - k) * 2 * z / (z ** 2 - shift + sympy.Rational(sigma))
    return total


def is_odd(expr: sympy.Expr, z=Z) -> bool:
    '''Whether f(−z) = −f(z) identically'''
    return sympy.cancel(expr.subs(z, -z) + expr) == 0


def s_j_continued(spectrum: SyntheticSpectrum, n: int, r: int, vol, delta, j: int, z=Z) -> sympy.Expr:
    '''s_j(z + n) as given by the trace formula

        L(e^{t·c_j²}·δ_j)(z) − L(e^{t·c_j²}·i_j)(z) − (1 + δ_{j,n})·δ(X, ρ)
    '''
    return delta_transform(spectrum, n, j, z) - identity_term(n, r, vol, j, z) - unipotent_term(n, delta, j)


def heat_kernel_hyperbolic(spec: LengthSpectrum, j: int, t: float) -> float:
    '''h_j(t) = (4πt)^{−½}·Σ_γ α_j(γ)·exp(−l²/(4t) − t·c_j² − n·l), real part'''
    n = spec.n
    total = sum(
        weight_alpha(e, j) * math.exp(-(e.length ** 2) / (4 * t) - t * c_j(n, j) ** 2 - n * e.length)
        for e in spec.entries
    )
    return float(complex(total).real) / math.sqrt(4 * math.pi * t)


def laplace_hyperbolic_quad(spec: LengthSpectrum, j: int, z: float) -> complex:
    '''L(e^{t·c_j²}·h_j)(z) by quadrature with t = e^u, one geodesic at a time

    Each integrand peaks at t = l/(2z) and is centred there; beyond
    |u| = U_RANGE it is below double precision.
    '''
    if z <= 0:
        raise ValueError('Quadrature mode needs z > 0')
    n = spec.n
    total = 0j
    for e in spec.entries:
        length = e.length
        centre = math.log(length / (2 * z))

        def integrand(u: float) -> float:
            t = math.exp(u + centre)
            exponent = -t * z * z - length ** 2 / (4 * t) - n * length
            return 2 * z * math.exp(exponent) / math.sqrt(4 * math.pi * t) * t

        total += weight_alpha(e, j) * adaptive_quad(integrand, -U_RANGE, U_RANGE, points=(0.0,))
    return total


def heat_to_geodesic_check(spec: LengthSpectrum, j: int, z: float) -> float:
    '''|L(e^{t·c_j²}·h_j)(z) − s_j(z + n)|

    The left side is integrated numerically from h_j(t), the right side is
    summed over the spectrum.

    Args:
        spec (LengthSpectrum): Finite spectrum.
        j (int): 0 ≤ j ≤ 2n.
        z (float): Real z > 0.

    Raises:
        QuadratureFailure: If a quadrature misses its tolerance.

    Returns:
        float: Residual
    '''
    lhs = laplace_hyperbolic_quad(spec, j, z)
    rhs = s_j(spec, j, z + spec.n)
    residual = abs(lhs - rhs)
    log.debug('Heat/geodesic residual j = %d, z = %s: %.3e', j, z, residual)
    return residual


def laplace_power_closed(k: int, z: float) -> float:
    '''L(t^{−½−k})(z) = 2Γ(½ − k)·z^{2k}'''
    return 2.0 * float(gamma_fn(0.5 - k)) * z ** (2 * k)
