# -*- coding: utf-8 -*-
'''Hyperbolic volumes from ideal triangulations and the L²-torsion constant
'''
import logging
import math

from ..errors.analysis import NegativeVolume
from ..schemas.shapes import ShapeList
from ..validators import Shape
from .dilog import bloch_wigner


log = logging.getLogger('Volume')

# −18·log τ^{(2)} is the regular part of r_X at the origin for d = 3
L2_LIMIT_FACTOR = -18


def tetra_volume(z: complex) -> float:
    '''Volume D(z) of the ideal tetrahedron with vertices ∞, 0, 1, z

    Args:
        z (complex): Cross ratio, Im z > 0.

    Returns:
        float: D(z), 0 with a warning for a degenerate shape
    '''
    if not Shape.validate(complex(z), strict=False):
        return 0.0
    return bloch_wigner(z)


def manifold_volume(s: ShapeList) -> float:
    '''Σ_i D(z_i) over a positively oriented ideal triangulation

    Args:
        s (ShapeList): Validated shapes.

    Returns:
        float: Hyperbolic volume
    '''
    volumes = [tetra_volume(z) for z in s.shapes]
    log.debug('Tetrahedron volumes: %s', volumes)
    return math.fsum(volumes)


def l2_torsion_log(r: int, vol: float) -> float:
    '''log τ^{(2)}(X, ρ) = r·vol/(6π) for d = 3

    Raises:
        NegativeVolume: If vol < 0.
    '''
    if vol < 0:
        e = NegativeVolume(f'Volume {vol} is negative')
        log.error(e)
        raise e
    return r * vol / (6 * math.pi)


def l2_torsion_limit(r: int, vol: float) -> float:
    '''−18·log τ^{(2)} = −3r·vol/π, the coefficient c₁ of R_X at the origin'''
    return L2_LIMIT_FACTOR * l2_torsion_log(r, vol)
