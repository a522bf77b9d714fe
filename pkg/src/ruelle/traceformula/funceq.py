# -*- coding: utf-8 -*-
'''Functional equation of R_X(z, ρ), the coefficient c₁ and the order at 0

    r_X(z) + r_X(−z) = prefactor·vol·χ(z) + 4·Σ_{j=0}^{n} (−1)^j·δ(X, ρ)

    χ(z) = Σ_j (−1)^j C(2n, j) Σ_k (−1)^k γ_{j,k} {(z+j−n)^{2k} + (z−j+n)^{2k}}

with prefactor = 4^{1−n}·r/((2n−1)!!²·π). Integrating from 0 gives
log R(z) − log R(−z) = prefactor·vol·X(z) + 4·Σ(−1)^j·δ·z with X' = χ.
'''
import logging
from typing import Sequence

import sympy

from ..errors.analysis import IndexOutOfRange
from ..schemas.reports import FuncEqReport
from .plancherel import gamma_coeffs


log = logging.getLogger('TraceFormula')

Z = sympy.Symbol('z')
VOL = sympy.Symbol('vol', nonnegative=True)
DELTA = sympy.Symbol('delta')


def alternating_sign_sum(n: int) -> int:
    '''Σ_{j=0}^{n} (−1)^j, 1 for even n and 0 for odd n'''
    return 1 if n % 2 == 0 else 0


def prefactor(n: int, r: int) -> sympy.Expr:
    '''4^{1−n}·r/((2n−1)!!²·π)'''
    if n < 1:
        raise IndexOutOfRange(f'n must be positive, got {n}')
    return sympy.Rational(4) ** (1 - n) * r / (sympy.factorial2(2 * n - 1) ** 2 * sympy.pi)


def chi_expr(n: int) -> sympy.Expr:
    '''χ(z) as an exact polynomial expression in `Z`'''
    table = gamma_coeffs(n)
    total = sympy.Integer(0)
    for j in range(n + 1):
        inner = sum(
            (-1) ** k * g * ((Z + j - n) ** (2 * k) + (Z - j + n) ** (2 * k))
            for k, g in enumerate(table.row(j))
        )
        total += (-1) ** j * sympy.binomial(2 * n, j) * inner
    return sympy.expand(total)


def _coefficients(expr: sympy.Expr, degree: int) -> list[sympy.Rational]:
    poly = sympy.Poly(expr, Z, domain='QQ')
    return [sympy.Rational(poly.coeff_monomial(Z ** k)) for k in range(degree + 1)]


def chi_poly(n: int, r: int, vol: float, delta: float = 0.0,
             h: Sequence[int] | None = None) -> FuncEqReport:
    '''Functional-equation polynomial χ(z) and its primitive X(z)

    Args:
        n (int): d = 2n + 1, n ≥ 1.
        r (int): Rank of ρ.
        vol (float): vol(X).
        delta (float, optional): δ(X, ρ). Defaults to 0.
        h (Sequence[int], optional): h^{l+1}(X, ρ), l = 0..n−1.

    Returns:
        FuncEqReport: Exact χ and X coefficients with the 1/π prefactor
    '''
    chi = chi_expr(n)
    primitive = sympy.integrate(chi, (Z, 0, Z))
    report = FuncEqReport(
        n=n, r=r, vol=vol, delta=delta, prefactor=prefactor(n, r),
        chi_coeffs=_coefficients(chi, 2 * n),
        X_coeffs=_coefficients(primitive, 2 * n + 1),
        c1=c1(n, r, vol, delta),
        order_formula_inputs=list(h or []),
    )
    log.debug('χ for n = %d: %s', n, chi)
    return report


def chi_value(report: FuncEqReport, z: complex) -> complex:
    '''prefactor·vol·χ(z)'''
    scale = float(report.prefactor) * report.vol
    return scale * sum(float(c) * z ** k for k, c in enumerate(report.chi_coeffs))


def funceq_exponent(report: FuncEqReport, z: complex) -> complex:
    '''prefactor·vol·X(z) + 4·Σ(−1)^j·δ·z, the expected log R(z) − log R(−z)
    '''
    scale = float(report.prefactor) * report.vol
    polynomial = sum(float(c) * z ** k for k, c in enumerate(report.X_coeffs))
    return scale * polynomial + 4 * alternating_sign_sum(report.n) * report.delta * z


def c1_exact(n: int, r: int) -> sympy.Expr:
    '''c₁ as an expression in the symbols `VOL` and `DELTA`'''
    chi0 = chi_expr(n).subs(Z, 0)
    return sympy.Rational(1, 2) * prefactor(n, r) * chi0 * VOL + 2 * alternating_sign_sum(n) * DELTA


def c1(n: int, r: int, vol: float, delta: float = 0.0) -> float:
    '''Second Taylor coefficient of R_X(z, ρ) at the origin

    c₁ = ½·prefactor·vol·χ(0) + 2·Σ_{j=0}^{n}(−1)^j·δ; the δ-term drops out for odd n.

    Args:
        n (int): d = 2n + 1.
        r (int): Rank of ρ.
        vol (float): vol(X).
        delta (float, optional): δ(X, ρ). Defaults to 0.

    Returns:
        float: c₁
    '''
    chi0 = chi_expr(n).subs(Z, 0)
    rational = sympy.Rational(1, 2) * prefactor(n, r) * chi0
    return float(rational) * vol + 2 * alternating_sign_sum(n) * delta


def order_at_origin(n: int, h: Sequence[int]) -> int:
    '''Order of R_X(z, ρ) at z = 0, 2·Σ_{l=0}^{n−1} (−1)^l (n−l) h^{l+1}

    Args:
        n (int): d = 2n + 1.
        h (Sequence[int]): h^{l+1}(X, ρ) for l = 0..n−1.

    Raises:
        IndexOutOfRange: If h does not have n nonnegative entries.

    Returns:
        int: Order at the origin
    '''
    if len(h) != n or any(value < 0 for value in h):
        raise IndexOutOfRange(f'Expected {n} nonnegative Betti numbers, got {list(h)}')
    return 2 * sum((-1) ** l * (n - l) * value for l, value in enumerate(h))


residue_at_origin = order_at_origin
