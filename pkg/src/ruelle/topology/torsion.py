# -*- coding: utf-8 -*-
'''Twisted chain complexes, combinatorial Laplacians and the modified torsion τ*

Chain complex file format::

    dims: 1 2 1
    D1:
    -2 0 -2 0
    D2:
    5 0
    -5 0

``D<p>`` is followed by dim C_{p−1} lines of 2·dim C_p reals (re/im pairs).
'''
import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.stats import unitary_group

from ..errors.topology import (
    ChainComplexError, ComplexFormatError, DegreeOutOfRange, IllConditioned,
    DimensionMismatch, SingularPeriodMatrix
)
from ..schemas.reports import TorsionReport
from ..schemas.twist import TwistData
from ..settings import get_settings
from .foxcalc import boundary_matrices
from .presentation import Presentation


log = logging.getLogger('Torsion')


@dataclass(frozen=True)
class ChainComplex:
    '''Finite complex of complex vector spaces C_k → … → C_0

    Attributes:
        dims (tuple[int, ...]): dim C_p for p = 0..k.
        boundaries (tuple[np.ndarray, ...]): D_p: C_p → C_{p−1} for p = 1..k,
            as dim C_{p−1} × dim C_p matrices acting on column vectors.
    '''
    dims: tuple[int, ...]
    boundaries: tuple[np.ndarray, ...] = field(default_factory=tuple)
    tol: float = 1e-9

    def __post_init__(self):
        if any(d < 0 for d in self.dims) or not self.dims:
            raise ChainComplexError('Dimensions must be a nonempty list of nonnegative integers')
        if len(self.boundaries) != len(self.dims) - 1:
            raise ChainComplexError(
                f'{len(self.dims)} chain groups need {len(self.dims) - 1} boundary maps'
            )
        frozen = []
        for p, matrix in enumerate(self.boundaries, start=1):
            matrix = np.array(matrix, dtype=complex).reshape(self.dims[p - 1], self.dims[p]) \
                if np.size(matrix) == 0 else np.array(matrix, dtype=complex)
            if matrix.shape != (self.dims[p - 1], self.dims[p]):
                raise ChainComplexError(
                    f'D{p} has shape {matrix.shape}, expected {(self.dims[p - 1], self.dims[p])}'
                )
            matrix.setflags(write=False)
            frozen.append(matrix)
        object.__setattr__(self, 'boundaries', tuple(frozen))
        for p in range(2, len(self.dims)):
            product = self.boundary(p - 1) @ self.boundary(p)
            defect = float(np.abs(product).max(initial=0.0))
            if defect > self.tol:
                raise ChainComplexError(f'D{p - 1}·D{p} ≠ 0 (max entry {defect:.3e})')

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def boundary(self, p: int) -> np.ndarray:
        '''D_p, the zero map for p = 0 and p = top + 1
        '''
        if p == 0:
            return np.zeros((0, self.dims[0]), dtype=complex)
        if p == self.top + 1:
            return np.zeros((self.dims[self.top], 0), dtype=complex)
        if not 0 < p <= self.top:
            raise DegreeOutOfRange(f'No boundary map in degree {p}')
        return self.boundaries[p - 1]

    def change_basis(self, unitaries: Sequence[np.ndarray]) -> 'ChainComplex':
        '''Complex with D_p replaced by U_{p−1}*·D_p·U_p
        '''
        if len(unitaries) != len(self.dims):
            raise DimensionMismatch('One unitary per chain group is needed')
        return ChainComplex(self.dims, tuple(
            unitaries[p - 1].conj().T @ self.boundaries[p - 1] @ unitaries[p]
            for p in range(1, len(self.dims))
        ), self.tol)

    def scaled(self, factor: complex) -> 'ChainComplex':
        return ChainComplex(self.dims, tuple(factor * d for d in self.boundaries), self.tol)


def complex_from_presentation(p: Presentation, rho: TwistData) -> ChainComplex:
    '''Twisted chain complex of a Wirtinger presentation specialized at t = 1

    Args:
        p (Presentation): Wirtinger presentation with n generators.
        rho (TwistData): Unitary representation of rank r.

    Returns:
        ChainComplex: dims (r, n·r, (n−1)·r) with D₁ = ∂₁(1)ᵀ, D₂ = ∂₂(1)ᵀ
    '''
    d2, d1 = boundary_matrices(p, rho)
    r, n = rho.rank, p.num_generators
    boundary1 = d1.evaluate(1.0).T
    boundary2 = d2.evaluate(1.0).T if d2.rows else np.zeros((n * r, 0), dtype=complex)
    return ChainComplex((r, n * r, (n - 1) * r), (boundary1, boundary2))


def comb_laplacian(c: ChainComplex, p: int) -> np.ndarray:
    '''Combinatorial Laplacian Δ^p = D_{p+1}·D_{p+1}* + D_p*·D_p

    Args:
        c (ChainComplex): Complex.
        p (int): Degree, 0 ≤ p ≤ top.

    Raises:
        DegreeOutOfRange: If p is out of range.

    Returns:
        np.ndarray: Hermitian positive semidefinite matrix
    '''
    if not 0 <= p <= c.top:
        raise DegreeOutOfRange(f'Degree {p} outside 0..{c.top}')
    up = c.boundary(p + 1)
    down = c.boundary(p)
    return up @ up.conj().T + down.conj().T @ down


def _rank(matrix: np.ndarray, cutoff: float) -> int:
    if matrix.size == 0:
        return 0
    singular = np.linalg.svd(matrix, compute_uv=False)
    return int(np.sum(singular ** 2 > cutoff))


def betti_numbers(c: ChainComplex, cutoff: float | None = None) -> list[int]:
    '''h^p = dim C_p − rank D_p − rank D_{p+1}
    '''
    cutoff = cutoff if cutoff is not None else get_settings().kernel_cutoff
    return [
        c.dims[p] - _rank(c.boundary(p), cutoff) - _rank(c.boundary(p + 1), cutoff)
        for p in range(c.top + 1)
    ]


def torsion_star(c: ChainComplex, cutoff: float | None = None, guard: float | None = None) -> TorsionReport:
    '''Modified Franz–Reidemeister torsion τ* = exp(−½ ζ′_comb(0))

    ζ′^{(p)}(0) = −Σ log λ over the positive eigenvalues of Δ^p and
    ζ_comb = Σ_p (−1)^p·p·ζ^{(p)}.

    Args:
        c (ChainComplex): Complex.
        cutoff (float, optional): Eigenvalues below are kernel.
        guard (float, optional): Upper end of the ambiguous band.

    Raises:
        IllConditioned: If an eigenvalue lies in (cutoff, guard).

    Returns:
        TorsionReport: Betti numbers, log det′ Δ^p and log τ*
    '''
    settings = get_settings()
    cutoff = cutoff if cutoff is not None else settings.kernel_cutoff
    guard = guard if guard is not None else settings.kernel_guard
    logdets: list[float] = []
    kernel: list[int] = []
    for p in range(c.top + 1):
        eigenvalues = np.linalg.eigvalsh(comb_laplacian(c, p)) if c.dims[p] else np.zeros(0)
        ambiguous = eigenvalues[(eigenvalues > cutoff) & (eigenvalues < guard)]
        if ambiguous.size:
            e = IllConditioned(
                f'Δ^{p} has eigenvalue {ambiguous[0]:.3e} between {cutoff:.0e} and {guard:.0e}'
            )
            log.error(e)
            raise e
        positive = eigenvalues[eigenvalues > cutoff]
        kernel.append(int(eigenvalues.size - positive.size))
        logdets.append(float(np.sum(np.log(positive))))
    log_tau = 0.5 * sum((-1) ** p * p * logdet for p, logdet in enumerate(logdets))
    betti = betti_numbers(c, cutoff)
    if betti != kernel:
        log.warning('Kernel dimensions %s differ from rank-based Betti numbers %s', kernel, betti)
    return TorsionReport(betti=betti, per_degree_logdet=logdets, log_tau_star=log_tau)


def period_matrix(basis_l2: Sequence[Sequence[complex]], basis_L2: Sequence[Sequence[complex]],
                  tol: float | None = None) -> tuple[np.ndarray, float]:
    '''Change-of-basis matrix P with ψ_i = Σ_j P_ij φ_j

    Args:
        basis_l2 (Sequence): Basis φ of a harmonic space (l² unitary).
        basis_L2 (Sequence): Basis ψ of the same space (L² unitary).
        tol (float, optional): Singularity and span tolerance.

    Raises:
        DimensionMismatch: If the bases differ in size, vector length or span.
        SingularPeriodMatrix: If P is singular.

    Returns:
        tuple[np.ndarray, float]: P and |det P|
    '''
    tol = tol if tol is not None else get_settings().det_tol
    phi = np.array(basis_l2, dtype=complex)
    psi = np.array(basis_L2, dtype=complex)
    if phi.shape[0] != psi.shape[0]:
        raise DimensionMismatch(f'Bases have {phi.shape[0]} and {psi.shape[0]} vectors')
    if phi.shape[0] == 0:
        return np.eye(0, dtype=complex), 1.0
    if phi.ndim != 2 or phi.shape != psi.shape:
        raise DimensionMismatch(f'Basis vectors have shapes {phi.shape} and {psi.shape}')
    matrix = psi @ np.linalg.pinv(phi)
    if not np.allclose(matrix @ phi, psi, atol=tol):
        raise DimensionMismatch('The two bases do not span the same space')
    determinant = abs(np.linalg.det(matrix))
    if determinant <= tol:
        raise SingularPeriodMatrix(f'|det P| = {determinant:.3e}')
    return matrix, float(determinant)


def period(determinants: Sequence[float]) -> float:
    '''Per(X, ρ) = Π_p |det P_p|^{(−1)^p}; empty data (acyclic case) gives 1
    '''
    return math.prod(abs(d) ** ((-1) ** p) for p, d in enumerate(determinants))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    '''Haar-random dim×dim unitary matrix'''
    if dim == 0:
        return np.eye(0, dtype=complex)
    if dim == 1:
        return np.array([[np.exp(2j * np.pi * rng.random())]])
    return unitary_group.rvs(dim, random_state=rng)


def random_unitary_change_of_basis(c: ChainComplex, rng: np.random.Generator) -> ChainComplex:
    '''Same complex in random unitary bases of every C_p, τ* is unchanged'''
    return c.change_basis([random_unitary(d, rng) for d in c.dims])


def leading_coefficient(report: TorsionReport, per: float = 1.0) -> float:
    '''(τ*·Per)², the leading coefficient of R_X(z, ρ) at the origin
    '''
    return (report.tau_star * per) ** 2


def parse_complex(text: str) -> ChainComplex:
    '''Parse a chain complex file

    Args:
        text (str): File contents.

    Raises:
        ComplexFormatError: If the file is malformed.
        ChainComplexError: If the maps do not form a complex.

    Returns:
        ChainComplex: Parsed complex
    '''
    dims: list[int] | None = None
    blocks: dict[int, list[list[float]]] = {}
    current: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith('dims:'):
            try:
                dims = [int(token) for token in line[5:].split()]
            except ValueError as e:
                raise ComplexFormatError(f'Line {lineno}: dims must be integers') from e
            continue
        if line[0] in 'Dd' and line.endswith(':'):
            try:
                current = int(line[1:-1])
            except ValueError as e:
                raise ComplexFormatError(f'Line {lineno}: bad boundary header {line!r}') from e
            blocks[current] = []
            continue
        if current is None:
            raise ComplexFormatError(f'Line {lineno}: matrix row before a D<p>: header')
        try:
            blocks[current].append([float(token) for token in line.split()])
        except ValueError as e:
            raise ComplexFormatError(f'Line {lineno}: expected real numbers') from e
    if dims is None:
        raise ComplexFormatError('Missing "dims:" line')
    boundaries = []
    for p in range(1, len(dims)):
        rows = blocks.get(p, [])
        if len(rows) != dims[p - 1] or any(len(row) != 2 * dims[p] for row in rows):
            raise ComplexFormatError(
                f'D{p} needs {dims[p - 1]} rows of {2 * dims[p]} reals'
            )
        if dims[p - 1] == 0 or dims[p] == 0:
            boundaries.append(np.zeros((dims[p - 1], dims[p]), dtype=complex))
            continue
        block = np.array(rows)
        boundaries.append(block[:, 0::2] + 1j * block[:, 1::2])
    return ChainComplex(tuple(dims), tuple(boundaries))
