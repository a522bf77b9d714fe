# -*- coding: utf-8 -*-
'''Input data validators
'''
import warnings

import numpy as np

from .errors.topology import (
    PresentationFormatError, NotUnitary, CuspidalityViolation
)
from .errors.analysis import DegenerateShape, TrivialCharacter


class GeneratorName:
    '''Generator token validator
    '''
    @staticmethod
    def validate(name: str) -> bool:
        '''Validate generator token

        Args:
            name (str): Generator token

        Returns:
            bool: True if the token is valid
        '''
        if not name:
            raise PresentationFormatError('Generator name is empty')
        if not name[0].isalpha() or not name.isalnum():
            raise PresentationFormatError(
                f'Generator name {name!r} must be alphanumeric and start with a letter'
            )
        if name != name.lower():
            raise PresentationFormatError(
                f'Generator name {name!r} must be lowercase, uppercase marks inverses'
            )
        return True


class Unitary:
    '''Unitary matrix validator
    '''
    @staticmethod
    def validate(matrix: np.ndarray, tol: float = 1e-9) -> bool:
        '''Validate unitarity ‖U·U* − I‖∞ ≤ tol

        Args:
            matrix (np.ndarray): Square complex matrix
            tol (float, optional): Tolerance. Defaults to 1e-9.

        Returns:
            bool: True if the matrix is unitary
        '''
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise NotUnitary(f'Expected a square matrix, got shape {matrix.shape}')
        defect = matrix @ matrix.conj().T - np.eye(matrix.shape[0])
        error = float(np.abs(defect).max(initial=0.0))
        if error > tol:
            raise NotUnitary(f'Matrix is not unitary: ‖UU* − I‖∞ = {error:.3e}')
        return True


class UnitCharacter:
    '''Rank-1 character validator
    '''
    @staticmethod
    def validate(xi: complex, cuspidal: bool = False, tol: float = 1e-12) -> bool:
        '''Validate |ξ| = 1 and optionally ξ ≠ 1

        Args:
            xi (complex): Character value
            cuspidal (bool, optional): Require ξ ≠ 1. Defaults to False.
            tol (float, optional): Tolerance. Defaults to 1e-12.

        Returns:
            bool: True if the character is valid
        '''
        if abs(abs(xi) - 1.0) > tol:
            raise NotUnitary(f'Character {xi} is not of modulus 1')
        if cuspidal and abs(xi - 1.0) <= tol:
            raise CuspidalityViolation('Character ξ = 1 is not cuspidal')
        return True


class LatticeCharacter:
    '''Lattice character validator
    '''
    @staticmethod
    def validate(alpha: tuple[float, float], tol: float = 1e-12) -> bool:
        '''Validate that a character α ∈ [0, 1)² is nontrivial

        Args:
            alpha (tuple[float, float]): Character vector

        Returns:
            bool: True if the character is nontrivial
        '''
        reduced = [a - round(a) for a in alpha]
        if all(abs(a) <= tol for a in reduced):
            raise TrivialCharacter('Character α = (0, 0) is trivial')
        return True


class Shape:
    '''Ideal tetrahedron shape validator
    '''
    @staticmethod
    def validate(z: complex, strict: bool = True) -> bool:
        '''Validate Im z > 0

        Args:
            z (complex): Cross ratio
            strict (bool, optional): Raise instead of warning. Defaults to True.

        Returns:
            bool: True if the shape is positively oriented
        '''
        if z.imag > 0:
            return True
        if strict:
            raise DegenerateShape(f'Shape {z} is not in the upper half plane')
        warnings.warn(f'Shape {z} is degenerate, its volume is taken as 0', UserWarning)
        return False
