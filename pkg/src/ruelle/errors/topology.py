# -*- coding: utf-8 -*-
'''Exceptions of presentations, Fox calculus, Alexander and torsion layers
'''
from .base import InputError, MathDomainError, ToleranceError


class PresentationFormatError(InputError):
    '''Presentation file is malformed
    '''
    pass


class UnknownGenerator(InputError):
    '''Relator uses a token that is not a declared generator
    '''
    pass


class EmptyRelator(InputError):
    '''Relator is empty after free reduction
    '''
    pass


class WirtingerViolation(InputError):
    '''Presentation is not of Wirtinger type
    '''
    pass


class GeneratorIndexError(InputError):
    '''Generator index out of range
    '''
    pass


class TwistFormatError(InputError):
    '''Twist file is malformed
    '''
    pass


class NotUnitary(InputError):
    '''Generator image is not unitary within tolerance
    '''
    pass


class NotARepresentation(InputError):
    '''Generator images do not satisfy a relator, ρ(r) ≠ I
    '''
    pass


class RankMismatch(InputError):
    '''Twist rank does not match the requested rank
    '''
    pass


class NotSquare(InputError):
    '''Determinant requested for a non-square matrix
    '''
    pass


class DegreeOutOfRange(InputError):
    '''Chain degree out of range
    '''
    pass


class ChainComplexError(InputError):
    '''Boundary shapes are inconsistent or D_{p-1}·D_p is not zero
    '''
    pass


class ComplexFormatError(InputError):
    '''Chain complex file is malformed
    '''
    pass


class DimensionMismatch(InputError):
    '''Two bases have different cardinality or vector length
    '''
    pass


class AllColumnsSingular(MathDomainError):
    '''No generator column gives a nonzero Δ₀
    '''
    pass


class ZeroDelta1(MathDomainError):
    '''Δ₁ vanishes identically
    '''
    pass


class NonAcyclic(MathDomainError):
    '''Twisted complex is not acyclic: Δ_{K,ρ}(1) is zero or a pole
    '''
    pass


class CuspidalityViolation(MathDomainError):
    '''Character is trivial (ξ = 1)
    '''
    pass


class SingularPeriodMatrix(MathDomainError):
    '''Change-of-basis matrix is singular
    '''
    pass


class IllConditioned(ToleranceError):
    '''Laplacian eigenvalue inside the kernel guard band
    '''
    pass
