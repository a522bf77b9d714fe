# -*- coding: utf-8 -*-
'''Exceptions of the trace-formula, Epstein, length-spectrum and volume layers
'''
from .base import InputError, MathDomainError, ToleranceError


class IndexOutOfRange(InputError):
    '''Representation index j outside its admissible range
    '''
    pass


class SpectrumFormatError(InputError):
    '''Length-spectrum file is malformed
    '''
    pass


class LatticeFormatError(InputError):
    '''Lattice file is malformed
    '''
    pass


class UnsupportedDimension(InputError):
    '''Only d = 3 (n = 1) is supported by this operation
    '''
    pass


class EmptyShapeList(InputError):
    '''No shape parameters given
    '''
    pass


class TrivialCharacter(MathDomainError):
    '''Lattice character is trivial, the Epstein L-function has a pole
    '''
    pass


class DegenerateLattice(MathDomainError):
    '''Lattice basis has zero determinant
    '''
    pass


class DegenerateShape(MathDomainError):
    '''Shape parameter is not in the upper half plane
    '''
    pass


class QuadratureFailure(ToleranceError):
    '''Adaptive quadrature did not reach the requested tolerance
    '''
    pass


class NonconvergentTheta(ToleranceError):
    '''Theta-series truncation bound not met within the point budget
    '''
    pass


class NegativeVolume(InputError):
    '''Hyperbolic volume must be nonnegative
    '''
    pass
