# -*- coding: utf-8 -*-
'''Plancherel coefficient table
'''
import sympy
from pydantic import BaseModel, Field, validator


class GammaTable(BaseModel):
    '''Coefficients γ_{j,k} of q_j(λ) = Σ_k γ_{j,k}·λ^{2k}

    Attributes:
        n (int): d = 2n + 1.
        gamma (list[list[sympy.Integer]]): Row j holds γ_{j,0..n}.
    '''
    n: int = Field(..., ge=1, description='Half of d − 1')
    gamma: list[list[sympy.Integer]] = Field(..., description='γ_{j,k}, 0 ≤ j, k ≤ n')

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator('gamma')
    def monic_square(cls, value, values):
        n = values.get('n')
        if n is None:
            return value
        if len(value) != n + 1 or any(len(row) != n + 1 for row in value):
            raise ValueError(f'γ table must be {n + 1}x{n + 1}')
        if any(row[n] != 1 for row in value):
            raise ValueError('q_j must be monic')
        return value

    def row(self, j: int) -> list[sympy.Integer]:
        return list(self.gamma[j])
