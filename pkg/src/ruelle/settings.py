# -*- coding: utf-8 -*-
'''Package settings

Values are read from the environment with the `RUELLE_` prefix,
e.g. `RUELLE_TOL=1e-8`.
'''
from functools import lru_cache

from pydantic import BaseSettings, Field, validator


class Settings(BaseSettings):
    '''Numerical tolerances and runtime options

    Attributes:
        tol (float): Relative tolerance of route cross-checks.
        trim (float): Coefficients with modulus below this are dropped.
        det_tol (float): Tolerance of determinant and unit-equality checks.
        kernel_cutoff (float): Laplacian eigenvalues below this are kernel.
        kernel_guard (float): Upper end of the ambiguous eigenvalue band.
        unitarity_tol (float): Allowed ‖UU* − I‖∞ for twist images.
        quad_abs_tol (float): Absolute tolerance of adaptive quadrature.
        theta_bound (float): Truncation bound of theta series.
        theta_max_points (int): Lattice point budget of a theta series.
        threads (int): Worker threads for independent evaluations.
        log_level (str): Logging level used by the CLI.
    '''
    tol: float = Field(1e-6, description='Cross-check relative tolerance')
    trim: float = Field(1e-12, description='Sparse-map cleanup threshold')
    det_tol: float = Field(1e-8, description='Determinant comparison tolerance')
    kernel_cutoff: float = Field(1e-9, description='Laplacian kernel cutoff')
    kernel_guard: float = Field(1e-7, description='Laplacian kernel guard band')
    unitarity_tol: float = Field(1e-9, description='Unitarity tolerance')
    quad_abs_tol: float = Field(1e-10, description='Quadrature absolute tolerance')
    theta_bound: float = Field(1e-16, description='Theta truncation bound')
    theta_max_points: int = Field(4_000_000, description='Theta point budget')
    threads: int = Field(1, description='Worker threads')
    log_level: str = Field('WARNING', description='CLI logging level')

    class Config:
        env_prefix = 'RUELLE_'

    @validator('tol', 'trim', 'det_tol', 'kernel_cutoff', 'kernel_guard',
               'unitarity_tol', 'quad_abs_tol', 'theta_bound')
    def positive(cls, value):
        if value <= 0:
            raise ValueError('tolerance must be positive')
        return value

    @validator('threads')
    def at_least_one(cls, value):
        if value < 1:
            raise ValueError('threads must be >= 1')
        return value


@lru_cache()
def get_settings() -> Settings:
    '''Get cached settings

    Returns:
        Settings: Settings read from the environment
    '''
    return Settings()
