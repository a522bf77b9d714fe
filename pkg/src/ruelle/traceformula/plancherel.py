# -*- coding: utf-8 -*-
'''Plancherel densities of the exterior-power bundles over H^{2n+1}

P_j(λ) = 4^{1−n}·C(2n, j)/((2n−1)!!²·π)·q_j(λ) with

    q_j(λ) = Π_{k=1}^{j} (λ² + (n−k+1)²) · Π_{k=j+1}^{n} (λ² + (n−k)²).

The rational part is exact (sympy); 1/π is kept as the symbol `sympy.pi`.
'''
import logging
from functools import lru_cache

import sympy

from ..errors.analysis import IndexOutOfRange
from ..schemas.plancherel import GammaTable


log = logging.getLogger('TraceFormula')

LAMBDA = sympy.Symbol('lambda', real=True)


def _check_index(n: int, j: int, upper: int | None = None):
    if n < 1:
        raise IndexOutOfRange(f'n must be positive, got {n}')
    upper = n if upper is None else upper
    if not 0 <= j <= upper:
        raise IndexOutOfRange(f'Index j = {j} outside 0..{upper}')


def q_factors(n: int, j: int) -> list[int]:
    '''Shifts a with q_j(λ) = Π (λ² + a²)
    '''
    _check_index(n, j)
    return [n - k + 1 for k in range(1, j + 1)] + [n - k for k in range(j + 1, n + 1)]


def q_poly(n: int, j: int) -> sympy.Poly:
    '''q_j as an exact polynomial in λ
    '''
    product = sympy.Integer(1)
    for a in q_factors(n, j):
        product *= LAMBDA ** 2 + a ** 2
    return sympy.Poly(sympy.expand(product), LAMBDA, domain='ZZ')


@lru_cache()
def gamma_coeffs(n: int) -> GammaTable:
    '''Expand q_j(λ) = Σ_k γ_{j,k} λ^{2k} exactly for j = 0..n

    Args:
        n (int): n ≥ 1.

    Raises:
        IndexOutOfRange: If n < 1.

    Returns:
        GammaTable: Integer table, monic in λ^{2n}
    '''
    if n < 1:
        raise IndexOutOfRange(f'n must be positive, got {n}')
    rows = []
    for j in range(n + 1):
        poly = q_poly(n, j)
        rows.append([sympy.Integer(poly.coeff_monomial(LAMBDA ** (2 * k))) for k in range(n + 1)])
    log.debug('γ table for n = %d: %s', n, rows)
    return GammaTable(n=n, gamma=rows)


def plancherel_constant(n: int, j: int) -> sympy.Rational:
    '''Rational part 4^{1−n}·C(2n, j)/(2n−1)!!² of P_j, for 0 ≤ j ≤ 2n
    '''
    _check_index(n, j, 2 * n)
    return sympy.Rational(4) ** (1 - n) * sympy.binomial(2 * n, j) / sympy.factorial2(2 * n - 1) ** 2


def plancherel_poly(n: int, j: int) -> sympy.Expr:
    '''Plancherel polynomial P_j(λ)

    Args:
        n (int): n ≥ 1.
        j (int): 0 ≤ j ≤ n.

    Raises:
        IndexOutOfRange: If j is out of range.

    Returns:
        sympy.Expr: Rational polynomial in `LAMBDA` divided by `sympy.pi`
    '''
    _check_index(n, j)
    return plancherel_constant(n, j) * q_poly(n, j).as_expr() / sympy.pi


def plancherel_density(n: int, j: int, lam: float) -> float:
    '''P_j(λ) as a float'''
    return float(plancherel_poly(n, j).subs(LAMBDA, lam))


def q_product(n: int, j: int, lam: float) -> float:
    '''q_j(λ) evaluated through its product form'''
    value = 1.0
    for a in q_factors(n, j):
        value *= lam * lam + a * a
    return value


def q_expanded(n: int, j: int, lam: float) -> float:
    '''q_j(λ) evaluated through the γ table'''
    return float(sum(float(g) * lam ** (2 * k) for k, g in enumerate(gamma_coeffs(n).row(j))))
