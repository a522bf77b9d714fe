# -*- coding: utf-8 -*-
'''Group-ring arithmetic, Fox free differential calculus and Φ = ε⊗ρ

Chain complexes use the row-vector convention: a matrix acts on row
vectors from the left, so ∂₁ is the n·r × r stack of blocks Φ(x_i − 1) and
∂₂ is the (n−1)·r × n·r grid of blocks Φ(∂r_j/∂x_i), with ∂₂·∂₁ = 0.
'''
import logging
from typing import Iterator, Mapping

import numpy as np

from ..errors.topology import GeneratorIndexError, NotARepresentation, RankMismatch, WirtingerViolation
from ..schemas.twist import TwistData
from ..settings import get_settings
from .laurent import LaurentMatrix, EPS_TRIM
from .presentation import Presentation, Word, multiply


log = logging.getLogger('FoxCalc')


class GroupRingElement:
    '''Element Σ c_w·w of the group ring ℂ[F_n]

    Terms with coefficient modulus ≤ `trim` are not stored.
    '''
    __slots__ = ('_terms',)

    def __init__(self, terms: Mapping[Word, complex] | None = None, trim: float = EPS_TRIM):
        self._terms: dict[Word, complex] = {
            word: complex(c) for word, c in (terms or {}).items() if abs(c) > trim
        }

    @classmethod
    def from_word(cls, word: Word, c: complex = 1.0) -> 'GroupRingElement':
        return cls({word: c})

    @classmethod
    def one(cls) -> 'GroupRingElement':
        return cls({Word(): 1.0})

    @property
    def terms(self) -> dict[Word, complex]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Word, complex]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __getitem__(self, word: Word) -> complex:
        return self._terms.get(word, 0j)

    def __add__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        keys = self._terms.keys() | other._terms.keys()
        return GroupRingElement({w: self[w] + other[w] for w in keys})

    def __neg__(self) -> 'GroupRingElement':
        return GroupRingElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        return self + (-other)

    def __mul__(self, other: 'GroupRingElement | complex') -> 'GroupRingElement':
        if not isinstance(other, GroupRingElement):
            return GroupRingElement({w: c * other for w, c in self._terms.items()})
        out: dict[Word, complex] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = multiply(u, v)
                out[w] = out.get(w, 0j) + a * b
        return GroupRingElement(out)

    def __rmul__(self, other: complex) -> 'GroupRingElement':
        return self * other

    def allclose(self, other: 'GroupRingElement', tol: float = 1e-12) -> bool:
        keys = self._terms.keys() | other._terms.keys()
        return all(abs(self[w] - other[w]) <= tol for w in keys)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        return f'GroupRingElement({len(self._terms)} terms)'


def fox_derivative(r: Word, i: int, num_generators: int | None = None) -> GroupRingElement:
    '''Fox derivative ∂r/∂x_i

    Uses ∂x_j/∂x_i = δ_ij, ∂(x_i⁻¹)/∂x_i = −x_i⁻¹ and the Leibniz rule
    ∂(uv)/∂x_i = ∂u/∂x_i + u·∂v/∂x_i.

    Args:
        r (Word): Reduced word.
        i (int): Generator index.
        num_generators (int, optional): Generator count of the free group,
            defaults to the largest index used by `r` plus one.

    Raises:
        GeneratorIndexError: If `i` is out of range.

    Returns:
        GroupRingElement: ∂r/∂x_i
    '''
    bound = num_generators if num_generators is not None else max(r.max_generator() + 1, i + 1)
    if not 0 <= i < bound:
        raise GeneratorIndexError(f'Generator index {i} out of range 0..{bound - 1}')
    terms: dict[Word, complex] = {}
    for prefix, (gen, exp) in r.prefixes():
        if gen != i:
            continue
        if exp > 0:
            terms[prefix] = terms.get(prefix, 0j) + 1.0
        else:
            word = multiply(prefix, Word(((gen, -1),)))
            terms[word] = terms.get(word, 0j) - 1.0
    return GroupRingElement(terms)


def phi(e: GroupRingElement, rho: TwistData, rank: int | None = None) -> LaurentMatrix:
    '''Specialize a group-ring element through Φ = ε⊗ρ

    A word w with coefficient c contributes c·ρ(w)·t^{ε(w)}, ε(w) being the
    exponent sum of w.

    Args:
        e (GroupRingElement): Element of ℂ[F_n].
        rho (TwistData): Unitary representation.
        rank (int, optional): Expected rank of ρ.

    Raises:
        RankMismatch: If `rank` differs from the rank of ρ.

    Returns:
        LaurentMatrix: r×r matrix over Λ
    '''
    if rank is not None and rank != rho.rank:
        raise RankMismatch(f'Twist has rank {rho.rank}, requested {rank}')
    size = rho.rank
    coefficients: dict[int, np.ndarray] = {}
    for word, c in e.items():
        power = word.exponent_sum()
        block = coefficients.setdefault(power, np.zeros((size, size), dtype=complex))
        block += c * rho.word_image(word.letters)
    return LaurentMatrix.from_coefficients(coefficients, size, size)


def boundary_matrices(p: Presentation, rho: TwistData) -> tuple[LaurentMatrix, LaurentMatrix]:
    '''Boundary matrices of the twisted chain complex of a Wirtinger presentation

    Args:
        p (Presentation): Wirtinger presentation, n generators and n − 1 relators.
        rho (TwistData): Unitary representation of rank r.

    Raises:
        WirtingerViolation: If the relator count is not n − 1.
        GeneratorIndexError: If ρ has fewer images than generators.
        NotARepresentation: If some relator does not map to the identity.

    Returns:
        tuple[LaurentMatrix, LaurentMatrix]: (∂₂, ∂₁) of shapes
            ((n−1)·r × n·r) and (n·r × r)
    '''
    n = p.num_generators
    if len(p.relators) != n - 1:
        raise WirtingerViolation(f'Expected {n - 1} relators, got {len(p.relators)}')
    if rho.num_generators is not None and rho.num_generators < n:
        raise GeneratorIndexError(
            f'Twist gives {rho.num_generators} images for {n} generators'
        )
    _check_relators(p, rho)
    one = GroupRingElement.one()
    d1 = LaurentMatrix.from_blocks([
        [phi(GroupRingElement.from_word(p.generator(i)) - one, rho)] for i in range(n)
    ])
    d2 = LaurentMatrix.from_blocks([
        [phi(entry, rho) for entry in row] for row in fox_jacobian(p)
    ])
    log.debug('Built boundary matrices d2 %s and d1 %s', d2.shape, d1.shape)
    return d2, d1


def _check_relators(p: Presentation, rho: TwistData):
    tol = get_settings().unitarity_tol
    identity = np.eye(rho.rank)
    for index, relator in enumerate(p.relators):
        defect = float(np.abs(rho.word_image(relator.letters) - identity).max(initial=0.0))
        if defect > tol * max(1, len(relator)):
            e = NotARepresentation(f'Relator {index} maps to a matrix {defect:.3e} away from I')
            log.error(e)
            raise e


def fox_jacobian(p: Presentation) -> list[list[GroupRingElement]]:
    '''Matrix of Fox derivatives ∂r_j/∂x_i over ℂ[F_n]
    '''
    return [
        [fox_derivative(relator, i, p.num_generators) for i in range(p.num_generators)]
        for relator in p.relators
    ]
