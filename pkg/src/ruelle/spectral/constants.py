# -*- coding: utf-8 -*-
'''Heat traces, Mellin constants and the S₀ product identity

    M(∫ e^{−t(λ²+c²)} P(λ) dλ)(0) = −2π·∫₀^c P(iy) dy

for an even polynomial P, with M(f)(s) = ∫₀^∞ f(t)·t^{s−1} dt continued to
s = 0. From it M(e₀)(0) = r·vol/(6π) − δ(X, ρ) and, for d = 3,
log S₀(2) − log S₀(0) = 2·M(e₀)(0).
'''
import logging
import math
from typing import Callable, Sequence

import numpy as np
import sympy

from ..schemas.spectrum import SyntheticSpectrum
from ..traceformula.funceq import order_at_origin
from ..traceformula.laplace import continued_power_integral, adaptive_quad


log = logging.getLogger('SpectralConstants')

Y = sympy.Symbol('y', real=True)


def _even_polynomial(coefficients: Sequence[float]) -> sympy.Expr:
    '''P(λ) = Σ_k a_k·λ^{2k} from the even coefficients a_k, evaluated at λ = iy'''
    return sum(
        sympy.nsimplify(a, rational=True) * (sympy.I * Y) ** (2 * k)
        for k, a in enumerate(coefficients)
    )


def mellin_poly_gaussian(P: Sequence[float], c: float) -> float:
    '''M(∫ e^{−t(λ²+c²)} P(λ) dλ)(0) = −2π·∫₀^c P(iy) dy

    Args:
        P (Sequence[float]): Even polynomial as coefficients a_k of λ^{2k}.
        c (float): c > 0.

    Returns:
        float: Continued Mellin transform at 0
    '''
    if c <= 0:
        raise ValueError('c must be positive')
    if not P:
        return 0.0
    integral = sympy.integrate(sympy.expand(_even_polynomial(P)), (Y, 0, sympy.nsimplify(c, rational=True)))
    return float(-2 * sympy.pi * integral)


def mellin_poly_gaussian_quad(P: Sequence[float], c: float) -> float:
    '''Quadrature companion of `mellin_poly_gaussian`

    ∫ e^{−tλ²}λ^{2k} dλ = 2^{−k}(2k−1)!!·√π·t^{−½−k}, so each term is
    √π·2^{−k}(2k−1)!!·∫₀^∞ e^{−tc²} t^{−3/2−k} dt continued by subtraction.
    '''
    total = 0.0
    for k, a in enumerate(P):
        if a == 0:
            continue
        moment = 2.0 ** (-k) * float(sympy.factorial2(2 * k - 1)) * math.sqrt(math.pi)
        total += a * moment * continued_power_integral(-0.5 - k, c * c)
    return total


def identity_unipotent_mellin(r: int, vol: float, delta: float) -> float:
    '''M(e₀)(0) = r·vol/(6π) − δ(X, ρ) for d = 3

    The identity part is r·vol/(4π²)·M(λ², c = 1) and the unipotent part is
    δ/(2π)·M(1, c = 1).
    '''
    identity = r * vol / (4 * math.pi ** 2) * mellin_poly_gaussian([0, 1], 1.0)
    unipotent = delta / (2 * math.pi) * mellin_poly_gaussian([1], 1.0)
    return identity + unipotent


def log_s0_gap(r: int, vol: float, delta: float) -> float:
    '''log S₀(2) − log S₀(0) = r·vol/(3π) − 2δ(X, ρ)'''
    return 2 * identity_unipotent_mellin(r, vol, delta)


def heat_trace(spec: SyntheticSpectrum, p: int, t: float) -> float:
    '''Tr e^{−tΔ^p} = Σ_l e^{−t·σ_p(l)}

    Args:
        spec (SyntheticSpectrum): Discrete spectrum.
        p (int): Degree.
        t (float): t > 0.

    Returns:
        float: Heat trace, 0 for an empty degree
    '''
    if t <= 0:
        raise ValueError('t must be positive')
    eigenvalues = np.asarray(spec.degree(p), dtype=float)
    return float(np.sum(np.exp(-t * eigenvalues)))


def laplace_heat_trace(spec: SyntheticSpectrum, p: int, z: float, shift: float = 0.0) -> float:
    '''L(e^{t·shift}·Tr e^{−tΔ^p})(z) by quadrature with t = e^u

    Equals Σ_l 2z/(z² − shift + σ_p(l)) for z² > shift.
    '''
    if z * z <= shift:
        raise ValueError('Need z² above the shift for convergence')

    def integrand(u: float) -> float:
        t = math.exp(u)
        return 2 * z * math.exp(-t * (z * z - shift)) * heat_trace(spec, p, t) * t

    return adaptive_quad(integrand, -60.0, 60.0)


def laplace_heat_trace_resolvent(spec: SyntheticSpectrum, p: int, z: float, shift: float = 0.0) -> float:
    '''Σ_l 2z/(z² − shift + σ_p(l))'''
    return math.fsum(2 * z / (z * z - shift + sigma) for sigma in spec.degree(p))


def log_det_laplacian(spec: SyntheticSpectrum, p: int, cutoff: float = 0.0) -> float:
    '''log det′ Δ^p = Σ log σ over the eigenvalues above `cutoff`'''
    return math.fsum(math.log(sigma) for sigma in spec.degree(p) if sigma > cutoff)


def order_from_spectrum(spec: SyntheticSpectrum, n: int, cutoff: float = 0.0) -> int:
    '''Order of R_X(z, ρ) at the origin from the Laplacian kernels

    h^{l+1} is read off as the number of zero eigenvalues of Δ^{l+1}.

    Args:
        spec (SyntheticSpectrum): Discrete spectrum.
        n (int): d = 2n + 1.
        cutoff (float, optional): Eigenvalues up to this are kernel. Defaults to 0.

    Returns:
        int: 2·Σ_{l=0}^{n−1} (−1)^l (n−l) h^{l+1}
    '''
    return order_at_origin(n, [spec.kernel_dim(l + 1, cutoff) for l in range(n)])


def s0_product_identity_check(s0_at: Callable[[float], complex], logdet0: float) -> float:
    '''|log S₀(0) + log S₀(2) − 2·log det Δ⁰|

    Agreement is expected only for complete, trace-formula consistent data;
    on truncated data the residual is a diagnostic.

    Args:
        s0_at (Callable): z ↦ log S₀(z), evaluated at 0 and 2.
        logdet0 (float): log det Δ⁰.

    Returns:
        float: Residual
    '''
    residual = abs(s0_at(0.0) + s0_at(2.0) - 2 * logdet0)
    log.debug('S₀ product residual: %.3e', residual)
    return residual
