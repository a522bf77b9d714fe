# -*- coding: utf-8 -*-
'''Ruelle L-function invariants of hyperbolic manifolds

Twisted Alexander functions and Reidemeister torsion of knot complements,
trace-formula constants of R_X(z, ρ), Epstein L-values of cusp lattices,
truncated Ruelle L-functions of length spectra and hyperbolic volumes.
'''
from .topology.presentation import Presentation, parse_presentation
from .topology.alexander import alexander
from .topology.torsion import ChainComplex, complex_from_presentation, torsion_star
from .schemas.twist import TwistData
from .traceformula.funceq import chi_poly, c1, order_at_origin
from .epstein.epstein import epstein_value, tau_nu, delta_constant
from .zeta.ruelle import ruelle_value, s_j, funceq_residual
from .volume.volume import manifold_volume, l2_torsion_log

from .__meta import __version__, __author__
