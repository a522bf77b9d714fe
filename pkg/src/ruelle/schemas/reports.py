# -*- coding: utf-8 -*-
'''Report models returned by the computational layers
'''
import math

import sympy
from pydantic import BaseModel, Field

from ..topology.laurent import LaurentPoly


class AlexanderReport(BaseModel):
    '''Twisted Alexander function of a knot group

    Attributes:
        delta0 (LaurentPoly): Δ₀(t) = det Φ(x_k − 1).
        delta1 (LaurentPoly): Δ₁(t), ∂₂ with the block column k deleted.
        chosen_column (int): Generator index k.
        value_at_1 (complex | None): Δ₁(1)/Δ₀(1), None at a pole or 0/0.
        special_value (float | None): |Δ_{K,ρ}(1)|² when finite.
        pole (bool): Δ₀(1) = 0 while Δ₁(1) ≠ 0.
        zero_delta1 (bool): Δ₁ vanishes identically.
    '''
    delta0: LaurentPoly = Field(..., description='Denominator Δ₀')
    delta1: LaurentPoly = Field(..., description='Numerator Δ₁')
    chosen_column: int = Field(..., ge=0, description='Deleted generator column')
    value_at_1: complex | None = Field(None, description='Δ_{K,ρ}(1)')
    special_value: float | None = Field(None, ge=0, description='R(0, ρ) = |Δ(1)|²')
    pole: bool = Field(False, description='Δ(1) is a pole')
    zero_delta1: bool = Field(False, description='Δ₁ ≡ 0')

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False


class TorsionReport(BaseModel):
    '''Combinatorial Laplacian data and the modified torsion τ*

    Attributes:
        betti (list[int]): h^p = dim C_p − rank D_p − rank D_{p+1}.
        per_degree_logdet (list[float]): Σ log λ over positive eigenvalues of Δ^p.
        log_tau_star (float): ½·Σ_p (−1)^p·p·logdet_p.
    '''
    betti: list[int] = Field(..., description='Betti numbers')
    per_degree_logdet: list[float] = Field(..., description='log det′ Δ^p')
    log_tau_star: float = Field(..., description='log τ*')

    class Config:
        allow_mutation = False

    @property
    def tau_star(self) -> float:
        return math.exp(self.log_tau_star)

    @property
    def acyclic(self) -> bool:
        return not any(self.betti)


class FuncEqReport(BaseModel):
    '''Functional-equation data of R_X(z, ρ)

    Attributes:
        n (int): d = 2n + 1.
        r (int): Rank of ρ.
        vol (float): vol(X).
        delta (float): δ(X, ρ).
        prefactor (sympy.Expr): 4^{1−n}·r/((2n−1)!!²·π), vol excluded.
        chi_coeffs (list[sympy.Rational]): χ(z) coefficients by power of z.
        X_coeffs (list[sympy.Rational]): X(z) = ∫₀^z χ coefficients.
        c1 (float): Second Taylor coefficient of R_X at the origin.
        order_formula_inputs (list[int]): h^{l+1}(X, ρ), l = 0..n−1, if known.
    '''
    n: int = Field(..., ge=1)
    r: int = Field(..., ge=1)
    vol: float = Field(..., ge=0)
    delta: float = Field(0.0)
    prefactor: sympy.Expr = Field(..., description='Rational multiple of 1/π')
    chi_coeffs: list[sympy.Rational] = Field(..., description='χ(z) coefficients')
    X_coeffs: list[sympy.Rational] = Field(..., description='X(z) coefficients')
    c1: float = Field(..., description='Second Taylor coefficient')
    order_formula_inputs: list[int] = Field(default_factory=list)

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False
