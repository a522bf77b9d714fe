# -*- coding: utf-8 -*-
'''Epstein L-functions of cusp lattices, τ_ν and δ(X, ρ) for d = 3

    ζ(s, χ) = Σ_{0 ≠ η ∈ Λ} χ(η)·|η|^{−2(s+1)}

With w = s + 1 the theta split gives

    π^{−w}Γ(w)·ζ = Σ'_η χ(η)·Γ(w, π|η|²)·(π|η|²)^{−w}
                 + (1/A)·Σ_k Γ(1−w, π|μ_k|²)·(π|μ_k|²)^{w−1} − 1/w

where A = |det B| and μ_k = B^{−T}(k − α) runs over the dual lattice
translated by α, which never contains 0 for a nontrivial character.
'''
import logging
import math
from typing import Sequence

import mpmath
import numpy as np

from ..errors.analysis import NonconvergentTheta, UnsupportedDimension
from ..schemas.lattice import CharLattice, CuspData
from ..settings import get_settings


log = logging.getLogger('Epstein')

# A(𝔫) for the two-dimensional 𝔫 of d = 3
SPHERE_AREA = 2 * math.pi


def truncation_radius(bound: float | None = None) -> float:
    '''Radius R with e^{−πR²} = bound'''
    bound = bound if bound is not None else get_settings().theta_bound
    return math.sqrt(-math.log(bound) / math.pi)


def _points_within(matrix: np.ndarray, shift: np.ndarray, radius: float, budget: int) -> tuple[np.ndarray, np.ndarray]:
    '''Integer vectors m with |matrix·(m − shift)| ≤ radius, and their images'''
    inverse_norm = float(np.linalg.norm(np.linalg.inv(matrix), 2))
    half = int(math.ceil(radius * inverse_norm)) + 1
    if (2 * half + 1) ** 2 > budget:
        e = NonconvergentTheta(
            f'Truncation radius {radius:.3g} needs {(2 * half + 1) ** 2} points, budget is {budget}'
        )
        log.error(e)
        raise e
    centre = np.round(shift).astype(int)
    axis = np.arange(-half, half + 1)
    grid = np.stack(np.meshgrid(axis + centre[0], axis + centre[1], indexing='ij'), axis=-1).reshape(-1, 2)
    images = (grid - shift) @ matrix.T
    keep = np.einsum('ij,ij->i', images, images) <= radius * radius
    return grid[keep], images[keep]


def epstein_value(lattice: CharLattice, s: complex, radius: float | None = None, n: int = 1) -> complex:
    '''ζ(s, χ) continued to the plane by the theta split

    Args:
        lattice (CharLattice): Lattice with nontrivial character.
        s (complex): Evaluation point.
        radius (float, optional): Truncation radius of both theta series,
            defaults to the radius of the `theta_bound` setting.
        n (int, optional): d = 2n + 1, only n = 1 is supported.

    Raises:
        UnsupportedDimension: If n ≠ 1.
        NonconvergentTheta: If the radius needs more than `theta_max_points`.

    Returns:
        complex: ζ(s, χ)
    '''
    if n != 1:
        raise UnsupportedDimension(f'Epstein L-functions are implemented for n = 1, got {n}')
    settings = get_settings()
    radius = radius if radius is not None else truncation_radius(settings.theta_bound)
    w = mpmath.mpc(s) + 1
    if abs(w) < 1e-14:
        return complex(-1.0)
    basis = lattice.basis
    alpha = np.array(lattice.alpha)
    zero = np.zeros(2)

    direct_m, direct_eta = _points_within(basis, zero, radius, settings.theta_max_points)
    direct = mpmath.mpc(0)
    for m, eta in zip(direct_m, direct_eta):
        norm = float(eta @ eta)
        if norm == 0.0:
            continue
        x = math.pi * norm
        character = mpmath.expjpi(2 * float(alpha @ m))
        direct += character * mpmath.gammainc(w, x) * mpmath.power(x, -w)

    dual = np.linalg.inv(basis).T
    dual_k, dual_mu = _points_within(dual, alpha, radius, settings.theta_max_points)
    poisson = mpmath.mpc(0)
    for mu in dual_mu:
        x = math.pi * float(mu @ mu)
        poisson += mpmath.gammainc(1 - w, x) * mpmath.power(x, w - 1)
    poisson /= lattice.covolume

    completed = direct + poisson - 1 / w
    value = mpmath.power(mpmath.pi, w) * mpmath.rgamma(w) * completed
    log.debug('ζ(%s) with %d direct and %d dual points: %s', s, len(direct_m), len(dual_k), value)
    return complex(value)


def direct_sum(lattice: CharLattice, s: complex, radius: int = 200) -> complex:
    '''Partial sum of ζ(s, χ) over 0 < |m| ≤ radius, in shells of growing |η|

    Only meaningful where the series converges, Re s > 0.

    Args:
        lattice (CharLattice): Lattice with character.
        s (complex): Evaluation point.
        radius (int, optional): Coordinate radius. Defaults to 200.

    Returns:
        complex: Partial sum
    '''
    axis = np.arange(-radius, radius + 1)
    grid = np.stack(np.meshgrid(axis, axis, indexing='ij'), axis=-1).reshape(-1, 2)
    grid = grid[np.einsum('ij,ij->i', grid, grid) <= radius * radius]
    grid = grid[np.any(grid != 0, axis=1)]
    images = grid @ lattice.basis.T
    norms = np.einsum('ij,ij->i', images, images)
    order = np.argsort(norms, kind='stable')[::-1]
    phases = np.exp(2j * np.pi * (grid[order] @ np.array(lattice.alpha)))
    terms = phases * np.power(norms[order], -(complex(s) + 1))
    return complex(np.sum(terms))


def tau_nu(cusp: CuspData, radius: float | None = None) -> complex:
    '''τ_ν = Σ_i ζ_ν(0, χ_{ν,i})'''
    return sum((epstein_value(lattice, 0, radius) for lattice in cusp.lattices), 0j)


def delta_constant(cusps: Sequence[CuspData], radius: float | None = None) -> complex:
    '''δ(X, ρ) = (1/A(𝔫))·Σ_ν vol(Γ_ν\\N_ν)·τ_ν with A(𝔫) = 2π

    Args:
        cusps (Sequence[CuspData]): Cusps, empty for a closed manifold.
        radius (float, optional): Theta truncation radius.

    Returns:
        complex: δ(X, ρ), 0 without cusps
    '''
    total = sum((cusp.covolume * tau_nu(cusp, radius) for cusp in cusps), 0j)
    return total / SPHERE_AREA
