# -*- coding: utf-8 -*-
'''Laurent polynomials over ℂ and matrices over Λ = ℂ[t, t⁻¹]
'''
import itertools
from typing import Iterable, Mapping, Sequence

import numpy as np

from ..errors.topology import NotSquare
from ..formatting import format_complex

EPS_TRIM = 1e-12


class LaurentPoly:
    '''Sparse Laurent polynomial Σ c_k t^k with complex coefficients

    Coefficients with modulus ≤ `trim` are not stored.
    '''
    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Mapping[int, complex] | None = None, trim: float = EPS_TRIM):
        self._coeffs: dict[int, complex] = {
            int(k): complex(c) for k, c in (coeffs or {}).items() if abs(c) > trim
        }

    @classmethod
    def constant(cls, c: complex) -> 'LaurentPoly':
        return cls({0: c})

    @classmethod
    def monomial(cls, c: complex, k: int) -> 'LaurentPoly':
        return cls({k: c})

    @classmethod
    def from_sequence(cls, coeffs: Sequence[complex], low: int = 0) -> 'LaurentPoly':
        '''Build from consecutive coefficients starting at exponent `low`
        '''
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, complex]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def low(self) -> int:
        '''Lowest exponent (valuation)'''
        return min(self._coeffs) if self._coeffs else 0

    def high(self) -> int:
        '''Highest exponent'''
        return max(self._coeffs) if self._coeffs else 0

    def __getitem__(self, k: int) -> complex:
        return self._coeffs.get(k, 0j)

    def __add__(self, other: 'LaurentPoly | complex') -> 'LaurentPoly':
        other = _as_poly(other)
        keys = self._coeffs.keys() | other._coeffs.keys()
        return LaurentPoly({k: self[k] + other[k] for k in keys})

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: 'LaurentPoly | complex') -> 'LaurentPoly':
        return self + (-_as_poly(other))

    def __rsub__(self, other: complex) -> 'LaurentPoly':
        return _as_poly(other) - self

    def __mul__(self, other: 'LaurentPoly | complex') -> 'LaurentPoly':
        other = _as_poly(other)
        out: dict[int, complex] = {}
        for (i, a), (j, b) in itertools.product(self._coeffs.items(), other._coeffs.items()):
            out[i + j] = out.get(i + j, 0j) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __call__(self, t: complex | np.ndarray) -> complex | np.ndarray:
        t = np.asarray(t, dtype=complex)
        total = np.zeros_like(t)
        for k, c in self._coeffs.items():
            total = total + c * t ** k
        return complex(total) if total.ndim == 0 else total

    def substitute_scale(self, xi: complex) -> 'LaurentPoly':
        '''Return p(ξt)'''
        return LaurentPoly({k: c * xi ** k for k, c in self._coeffs.items()})

    def shift(self, k: int) -> 'LaurentPoly':
        '''Return t^k·p(t)'''
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def allclose(self, other: 'LaurentPoly', tol: float = 1e-8) -> bool:
        '''Coefficientwise comparison within `tol`'''
        keys = self._coeffs.keys() | other._coeffs.keys()
        return all(abs(self[k] - other[k]) <= tol for k in keys)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, float, complex)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items(), key=lambda kv: kv[0])))

    def __repr__(self) -> str:
        return f'LaurentPoly({str(self)})'

    def __str__(self) -> str:
        if not self._coeffs:
            return '0'
        terms = []
        for k in sorted(self._coeffs):
            c = format_complex(self._coeffs[k])
            if k == 0:
                terms.append(f'({c})' if 'j' in c else c)
            else:
                terms.append(f'({c})*t^{k}')
        return ' + '.join(terms)


def _as_poly(value: 'LaurentPoly | complex') -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.constant(value)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1.0)


class LaurentMatrix:
    '''Rectangular matrix with LaurentPoly entries
    '''
    __slots__ = ('_entries', 'rows', 'cols')

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]]):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        if any(len(row) != cols for row in entries):
            raise ValueError('LaurentMatrix rows must have equal length')
        self._entries: tuple[tuple[LaurentPoly, ...], ...] = tuple(tuple(row) for row in entries)
        self.rows = rows
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'LaurentMatrix':
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, size: int) -> 'LaurentMatrix':
        return cls([[ONE if i == j else ZERO for j in range(size)] for i in range(size)])

    @classmethod
    def from_coefficients(cls, terms: Mapping[int, np.ndarray], rows: int, cols: int) -> 'LaurentMatrix':
        '''Build Σ_k A_k t^k from coefficient matrices A_k
        '''
        return cls([
            [LaurentPoly({k: a[i, j] for k, a in terms.items()}) for j in range(cols)]
            for i in range(rows)
        ])

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence['LaurentMatrix']]) -> 'LaurentMatrix':
        '''Assemble a block matrix from a grid of LaurentMatrix blocks
        '''
        entries: list[list[LaurentPoly]] = []
        for block_row in blocks:
            height = block_row[0].rows
            for i in range(height):
                entries.append([entry for block in block_row for entry in block.row(i)])
        return cls(entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self._entries[i]

    def __getitem__(self, index: tuple[int, int]) -> LaurentPoly:
        i, j = index
        return self._entries[i][j]

    def __iter__(self):
        return iter(self._entries)

    def __add__(self, other: 'LaurentMatrix') -> 'LaurentMatrix':
        if self.shape != other.shape:
            raise ValueError(f'Shape mismatch {self.shape} vs {other.shape}')
        return LaurentMatrix([
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._entries, other._entries)
        ])

    def __sub__(self, other: 'LaurentMatrix') -> 'LaurentMatrix':
        return self + other.scale(-1.0)

    def scale(self, c: complex) -> 'LaurentMatrix':
        return LaurentMatrix([[c * a for a in row] for row in self._entries])

    def __matmul__(self, other: 'LaurentMatrix') -> 'LaurentMatrix':
        if self.cols != other.rows:
            raise ValueError(f'Cannot multiply {self.shape} by {other.shape}')
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a, b = self._entries[i][k], other._entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out)

    def transpose(self) -> 'LaurentMatrix':
        return LaurentMatrix([list(col) for col in zip(*self._entries)]) if self.rows else self

    def delete_columns(self, columns: Iterable[int]) -> 'LaurentMatrix':
        drop = set(columns)
        return LaurentMatrix([
            [entry for j, entry in enumerate(row) if j not in drop] for row in self._entries
        ])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> 'LaurentMatrix':
        return LaurentMatrix([[self._entries[i][j] for j in cols] for i in rows])

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self._entries for entry in row)

    def degree_window(self) -> tuple[int, int] | None:
        '''Sum over rows of the minimal and maximal entry exponents

        Returns:
            tuple[int, int] | None: (low, high), None if some row is zero
        '''
        low = high = 0
        for row in self._entries:
            nonzero = [entry for entry in row if not entry.is_zero()]
            if not nonzero:
                return None
            low += min(entry.low() for entry in nonzero)
            high += max(entry.high() for entry in nonzero)
        return low, high

    def coefficient_stack(self) -> tuple[int, np.ndarray]:
        '''Dense coefficient array A with M(t) = Σ_k A[k] t^{low + k}
        '''
        exponents = [k for row in self._entries for entry in row for k in entry.coeffs]
        low = min(exponents, default=0)
        high = max(exponents, default=0)
        stack = np.zeros((high - low + 1, self.rows, self.cols), dtype=complex)
        for i, row in enumerate(self._entries):
            for j, entry in enumerate(row):
                for k, c in entry.coeffs.items():
                    stack[k - low, i, j] = c
        return low, stack

    def evaluate(self, t: complex | np.ndarray) -> np.ndarray:
        '''Evaluate at one point (rows × cols) or many points (P × rows × cols)
        '''
        points = np.atleast_1d(np.asarray(t, dtype=complex))
        low, stack = self.coefficient_stack()
        powers = points[:, None] ** (low + np.arange(stack.shape[0]))[None, :]
        values = np.tensordot(powers, stack, axes=(1, 0))
        return values[0] if np.ndim(t) == 0 else values

    def allclose(self, other: 'LaurentMatrix', tol: float = 1e-9) -> bool:
        if self.shape != other.shape:
            return False
        return all(
            a.allclose(b, tol) for ra, rb in zip(self._entries, other._entries) for a, b in zip(ra, rb)
        )

    def __repr__(self) -> str:
        return f'LaurentMatrix({self.rows}x{self.cols})'


def det(m: LaurentMatrix, trim: float = EPS_TRIM) -> LaurentPoly:
    '''Determinant by evaluation at roots of unity and FFT interpolation

    With the degree window (low, high) of the matrix, t^{-low}·det M(t) is a
    polynomial of degree < K = high − low + 1, so K roots of unity determine
    it without aliasing.

    Args:
        m (LaurentMatrix): Square matrix.
        trim (float, optional): Coefficient cleanup threshold.

    Raises:
        NotSquare: If the matrix is not square.

    Returns:
        LaurentPoly: Determinant
    '''
    if m.rows != m.cols:
        raise NotSquare(f'Determinant of a {m.rows}x{m.cols} matrix')
    if m.rows == 0:
        return ONE
    window = m.degree_window()
    if window is None:
        return ZERO
    low, high = window
    size = high - low + 1
    points = np.exp(2j * np.pi * np.arange(size) / size)
    values = np.linalg.det(m.evaluate(points)) * points ** (-low)
    coeffs = np.fft.fft(values) / size
    return LaurentPoly({low + k: c for k, c in enumerate(coeffs)}, trim=trim)


def det_cofactor(m: LaurentMatrix) -> LaurentPoly:
    '''Determinant by cofactor expansion along the first row

    Exponential in the size; used as an independent oracle for `det`.

    Args:
        m (LaurentMatrix): Square matrix.

    Raises:
        NotSquare: If the matrix is not square.

    Returns:
        LaurentPoly: Determinant
    '''
    if m.rows != m.cols:
        raise NotSquare(f'Determinant of a {m.rows}x{m.cols} matrix')
    size = m.rows
    if size == 0:
        return ONE
    if size == 1:
        return m[0, 0]
    total = ZERO
    rest = list(range(1, size))
    for j in range(size):
        entry = m[0, j]
        if entry.is_zero():
            continue
        minor = m.submatrix(rest, [c for c in range(size) if c != j])
        term = entry * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
