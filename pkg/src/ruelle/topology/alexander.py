# -*- coding: utf-8 -*-
'''Twisted Alexander function Δ_{K,ρ}(t) = Δ₁(t)/Δ₀(t) and R(0, ρ)
'''
import logging
from dataclasses import dataclass

from ..errors.topology import (
    AllColumnsSingular, NonAcyclic, CuspidalityViolation, ZeroDelta1
)
from ..schemas.reports import AlexanderReport
from ..schemas.twist import TwistData
from ..settings import get_settings
from ..validators import UnitCharacter
from .foxcalc import boundary_matrices
from .laurent import LaurentPoly, LaurentMatrix, det
from .presentation import Presentation


log = logging.getLogger('Alexander')


def _is_zero(p: LaurentPoly, tol: float) -> bool:
    return all(abs(c) <= tol for c in p.coeffs.values())


def normalize_unit(p: LaurentPoly) -> LaurentPoly:
    '''Representative of p modulo units c·t^k with |c| = 1

    The lowest exponent is moved to 0 and the top coefficient is rotated
    onto the positive real axis.
    '''
    if p.is_zero():
        return p
    top = p[p.high()]
    return p.shift(-p.low()) * (abs(top) / top)


def equal_up_to_units(p: LaurentPoly, q: LaurentPoly, tol: float | None = None) -> bool:
    '''Compare two Laurent polynomials up to units ±t^k (phase and shift)

    Args:
        p (LaurentPoly): First polynomial.
        q (LaurentPoly): Second polynomial.
        tol (float, optional): Coefficient tolerance, defaults to the
            `det_tol` setting.

    Returns:
        bool: True if p = u·q for a unit u
    '''
    tol = tol if tol is not None else get_settings().det_tol
    p_zero, q_zero = _is_zero(p, tol), _is_zero(q, tol)
    if p_zero or q_zero:
        return p_zero and q_zero
    p = LaurentPoly({k: c for k, c in p.coeffs.items() if abs(c) > tol})
    q = LaurentPoly({k: c for k, c in q.coeffs.items() if abs(c) > tol})
    return normalize_unit(p).allclose(normalize_unit(q), tol)


@dataclass(frozen=True)
class RationalFunction:
    '''Quotient num/den of Laurent polynomials, kept as computed

    Attributes:
        num (LaurentPoly): Numerator.
        den (LaurentPoly): Nonzero denominator.
    '''
    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError('Denominator of a rational function is zero')

    def __call__(self, t: complex) -> complex:
        return complex(self.num(t)) / complex(self.den(t))

    def equals(self, other: 'RationalFunction', tol: float | None = None) -> bool:
        '''Equality by cross multiplication'''
        return (self.num * other.den).allclose(other.num * self.den, tol or get_settings().det_tol)

    def equals_up_to_units(self, other: 'RationalFunction', tol: float | None = None) -> bool:
        return equal_up_to_units(self.num * other.den, other.num * self.den, tol)


def _column_block(d1: LaurentMatrix, k: int, rank: int) -> LaurentMatrix:
    rows = range(k * rank, (k + 1) * rank)
    return d1.submatrix(rows, range(rank))


def _report(d2: LaurentMatrix, delta0: LaurentPoly, k: int, rank: int, tol: float) -> AlexanderReport:
    delta1 = det(d2.delete_columns(range(k * rank, (k + 1) * rank)))
    zero_delta1 = _is_zero(delta1, tol)
    if zero_delta1:
        log.warning('Δ₁ vanishes identically for column %d', k)
    d0_at_1 = complex(delta0(1.0))
    d1_at_1 = complex(delta1(1.0))
    value: complex | None = None
    special: float | None = None
    pole = False
    if abs(d0_at_1) > tol:
        value = d1_at_1 / d0_at_1
        special = abs(value) ** 2
    elif abs(d1_at_1) > tol:
        pole = True
    return AlexanderReport(
        delta0=delta0, delta1=delta1, chosen_column=k, value_at_1=value,
        special_value=special, pole=pole, zero_delta1=zero_delta1
    )


def alexander(p: Presentation, rho: TwistData, tol: float | None = None, strict: bool = False) -> AlexanderReport:
    '''Twisted Alexander function of a Wirtinger presentation

    The first generator k (ascending) with Δ₀ = det Φ(x_k − 1) ≠ 0 is used.

    Args:
        p (Presentation): Wirtinger presentation.
        rho (TwistData): Unitary representation.
        tol (float, optional): Zero tolerance, defaults to `det_tol`.
        strict (bool, optional): Raise on Δ₁ ≡ 0 instead of flagging it.

    Raises:
        AllColumnsSingular: If every Δ₀ candidate vanishes.
        ZeroDelta1: If `strict` and Δ₁ vanishes identically.

    Returns:
        AlexanderReport: Δ₀, Δ₁, Δ(1) and R(0, ρ)
    '''
    tol = tol if tol is not None else get_settings().det_tol
    d2, d1 = boundary_matrices(p, rho)
    for k in range(p.num_generators):
        delta0 = det(_column_block(d1, k, rho.rank))
        if not _is_zero(delta0, tol):
            log.debug('Using generator column %d', k)
            report = _report(d2, delta0, k, rho.rank, tol)
            if strict and report.zero_delta1:
                e = ZeroDelta1(f'Δ₁ vanishes identically for column {k}')
                log.error(e)
                raise e
            return report
    e = AllColumnsSingular('det Φ(x_k − 1) vanishes for every generator')
    log.error(e)
    raise e


def column_reports(p: Presentation, rho: TwistData, tol: float | None = None) -> list[AlexanderReport]:
    '''Reports for every generator column with Δ₀ ≠ 0

    Args:
        p (Presentation): Wirtinger presentation.
        rho (TwistData): Unitary representation.
        tol (float, optional): Zero tolerance, defaults to `det_tol`.

    Returns:
        list[AlexanderReport]: One report per admissible column
    '''
    tol = tol if tol is not None else get_settings().det_tol
    d2, d1 = boundary_matrices(p, rho)
    reports = []
    for k in range(p.num_generators):
        delta0 = det(_column_block(d1, k, rho.rank))
        if not _is_zero(delta0, tol):
            reports.append(_report(d2, delta0, k, rho.rank, tol))
    return reports


def twisted_alexander_function(report: AlexanderReport) -> RationalFunction:
    return RationalFunction(report.delta1, report.delta0)


def special_value_rank1(alexander_poly: LaurentPoly, xi: complex, tol: float | None = None) -> float:
    '''R(0, ρ) = |A_K(ξ)/(1 − ξ)|² for a character ρ(t) = ξ

    Args:
        alexander_poly (LaurentPoly): Alexander polynomial A_K.
        xi (complex): Unit-modulus character value.
        tol (float, optional): Zero tolerance, defaults to `det_tol`.

    Raises:
        CuspidalityViolation: If ξ = 1.
        NonAcyclic: If A_K(ξ) = 0.

    Returns:
        float: R(0, ρ)
    '''
    tol = tol if tol is not None else get_settings().det_tol
    try:
        UnitCharacter.validate(xi, cuspidal=True)
    except CuspidalityViolation as e:
        log.error(e)
        raise e
    value = complex(alexander_poly(xi))
    if abs(value) <= tol:
        e = NonAcyclic(f'A_K(ξ) = 0 at ξ = {xi}')
        log.error(e)
        raise e
    return abs(value / (1 - xi)) ** 2


def acyclicity_check(report: AlexanderReport, tol: float | None = None) -> bool:
    '''Whether Δ_{K,ρ}(1) is finite and nonzero

    Args:
        report (AlexanderReport): Report from `alexander`.
        tol (float, optional): Zero tolerance, defaults to `det_tol`.

    Returns:
        bool: True if the twisted complex at t = 1 is acyclic
    '''
    tol = tol if tol is not None else get_settings().det_tol
    if report.value_at_1 is None or report.zero_delta1:
        return False
    return abs(report.value_at_1) > tol
