# -*- coding: utf-8 -*-
'''Length spectra of closed geodesics and synthetic Laplace spectra

Length-spectrum file (CSV)::

    n,r,cutoff
    1,1,10
    # l0,k,theta1[,theta2...],re_tr,im_tr
    1.0,1,0.0,1.0,0.0
    1.0,2,0.0,1.0,0.0
'''
import csv
import io
import math

from pydantic import BaseModel, Field, validator, root_validator

from ..errors.analysis import SpectrumFormatError


class GeodesicEntry(BaseModel):
    '''Hyperbolic conjugacy class γ = γ₀^k

    Attributes:
        l0 (float): Length of the primitive geodesic γ₀.
        k (int): Multiplicity μ(γ).
        thetas (list[float]): Holonomy angles of m_γ ∈ SO(2n).
        trace_rho (complex): Tr ρ(γ).
    '''
    l0: float = Field(..., gt=0, description='Primitive length')
    k: int = Field(1, ge=1, description='Power of the primitive class')
    thetas: list[float] = Field(default_factory=list, description='Holonomy angles')
    trace_rho: complex = Field(1 + 0j, description='Tr ρ(γ)')

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator('trace_rho', pre=True)
    def coerce_trace(cls, value):
        return complex(value)

    @property
    def length(self) -> float:
        '''l(γ) = k·l0'''
        return self.k * self.l0


class LengthSpectrum(BaseModel):
    '''Truncated list of hyperbolic classes of Γ, sorted by length

    Attributes:
        n (int): d = 2n + 1.
        r (int): Rank of ρ.
        entries (list[GeodesicEntry]): Classes with l(γ) ≤ cutoff.
        cutoff (float): Largest length included.
    '''
    n: int = Field(1, ge=1)
    r: int = Field(1, ge=1)
    entries: list[GeodesicEntry] = Field(default_factory=list)
    cutoff: float = Field(math.inf, gt=0)

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def consistent(cls, values):
        n, r, cutoff = values['n'], values['r'], values['cutoff']
        entries = values.get('entries', [])
        for index, entry in enumerate(entries):
            if len(entry.thetas) != n:
                raise SpectrumFormatError(f'Entry {index}: expected {n} angles, got {len(entry.thetas)}')
            if abs(entry.trace_rho) > r + 1e-12:
                raise SpectrumFormatError(f'Entry {index}: |Tr ρ| = {abs(entry.trace_rho)} exceeds r = {r}')
            if entry.length > cutoff:
                raise SpectrumFormatError(f'Entry {index}: length {entry.length} above cutoff {cutoff}')
        values['entries'] = sorted(entries, key=lambda e: (e.length, e.l0))
        return values

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def parse(cls, text: str) -> 'LengthSpectrum':
        '''Parse a length-spectrum CSV file

        Args:
            text (str): File contents.

        Raises:
            SpectrumFormatError: If the file is malformed.

        Returns:
            LengthSpectrum: Sorted spectrum
        '''
        rows = [
            row for row in csv.reader(io.StringIO(text))
            if row and not row[0].strip().startswith('#') and any(cell.strip() for cell in row)
        ]
        if rows and [cell.strip().lower() for cell in rows[0]] == ['n', 'r', 'cutoff']:
            rows = rows[1:]
        if not rows:
            raise SpectrumFormatError('Missing "n,r,cutoff" values')
        try:
            n, r = int(rows[0][0]), int(rows[0][1])
            cutoff = float(rows[0][2])
        except (ValueError, IndexError) as e:
            raise SpectrumFormatError('First data row must be "n,r,cutoff"') from e
        entries = []
        for lineno, row in enumerate(rows[1:], start=2):
            if len(row) != n + 4:
                raise SpectrumFormatError(f'Row {lineno}: expected {n + 4} fields, got {len(row)}')
            try:
                entries.append(GeodesicEntry(
                    l0=float(row[0]), k=int(row[1]),
                    thetas=[float(cell) for cell in row[2:2 + n]],
                    trace_rho=complex(float(row[-2]), float(row[-1])),
                ))
            except ValueError as e:
                raise SpectrumFormatError(f'Row {lineno}: {e}') from e
        return cls(n=n, r=r, entries=entries, cutoff=cutoff)


class SyntheticSpectrum(BaseModel):
    '''Discrete spectra σ_p(l) of the twisted Hodge Laplacians Δ^p

    Attributes:
        eigenvalues (dict[int, list[float]]): Sorted nonnegative eigenvalues per degree.
    '''
    eigenvalues: dict[int, list[float]] = Field(default_factory=dict)

    class Config:
        allow_mutation = False

    @validator('eigenvalues')
    def nonnegative_sorted(cls, value):
        for degree, values in value.items():
            if degree < 0:
                raise SpectrumFormatError(f'Negative degree {degree}')
            if any(v < 0 for v in values):
                raise SpectrumFormatError(f'Degree {degree} has a negative eigenvalue')
        return {degree: sorted(values) for degree, values in value.items()}

    def degree(self, p: int) -> list[float]:
        return list(self.eigenvalues.get(p, []))

    def kernel_dim(self, p: int, cutoff: float = 0.0) -> int:
        '''h^p, the number of eigenvalues ≤ cutoff in degree p'''
        return sum(1 for value in self.degree(p) if value <= cutoff)
