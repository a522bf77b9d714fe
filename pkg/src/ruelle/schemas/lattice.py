# -*- coding: utf-8 -*-
'''Cusp lattices with characters

Lattice file format, one ``covolume:`` line per cusp followed by one
``basis:``/``alpha:`` pair per character of that cusp::

    covolume: 1
    basis: 1 0 0 1
    alpha: 0.5 0.5

``basis: b11 b21 b12 b22`` lists the lattice generators b1 = (b11, b21) and
b2 = (b12, b22) as columns, in coordinates of the normalized Cartan–Killing
metric.
'''
import numpy as np
from pydantic import BaseModel, Field, validator, root_validator

from ..errors.analysis import DegenerateLattice, LatticeFormatError
from ..validators import LatticeCharacter


class CharLattice(BaseModel):
    '''Rank-2 lattice Λ = B·ℤ² with character χ(Bm) = exp(2πi·α·m)

    Attributes:
        basis (np.ndarray): 2×2 real matrix, columns are the generators.
        alpha (tuple[float, float]): Nontrivial character vector in [0, 1)².
    '''
    basis: np.ndarray = Field(..., description='Lattice generators as columns')
    alpha: tuple[float, float] = Field(..., description='Character vector')

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator('basis', pre=True)
    def coerce_basis(cls, value):
        basis = np.array(value, dtype=float)
        if basis.shape != (2, 2):
            raise LatticeFormatError(f'Basis must be 2x2, got shape {basis.shape}')
        if abs(np.linalg.det(basis)) <= 1e-14:
            raise DegenerateLattice('Lattice basis has zero determinant')
        basis.setflags(write=False)
        return basis

    @validator('alpha')
    def nontrivial(cls, value):
        LatticeCharacter.validate(value)
        return (value[0] % 1.0, value[1] % 1.0)

    @property
    def covolume(self) -> float:
        '''|det B|'''
        return float(abs(np.linalg.det(self.basis)))

    def conjugate(self) -> 'CharLattice':
        '''Same lattice with the character χ̄, α ↦ −α mod 1'''
        return CharLattice(basis=self.basis, alpha=(-self.alpha[0], -self.alpha[1]))


class CuspData(BaseModel):
    '''Cross-section lattice Γ_ν of one cusp with the characters χ_{ν,i}

    Attributes:
        lattices (list[CharLattice]): One lattice per character, same basis up to 1e−12.
        covolume (float): vol(Γ_ν\\N_ν).
    '''
    lattices: list[CharLattice] = Field(..., min_items=1)
    covolume: float = Field(..., gt=0)

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def consistent_covolume(cls, values):
        for index, lattice in enumerate(values['lattices']):
            if abs(lattice.covolume - values['covolume']) > 1e-12 * max(1.0, values['covolume']):
                raise LatticeFormatError(
                    f'Character {index}: |det basis| = {lattice.covolume} differs from covolume {values["covolume"]}'
                )
        return values


def parse_lattices(text: str) -> list[CuspData]:
    '''Parse a lattice file into cusps

    Args:
        text (str): File contents.

    Raises:
        LatticeFormatError: If the file is malformed.

    Returns:
        list[CuspData]: Cusps in file order, empty for a closed manifold
    '''
    cusps: list[tuple[float | None, list[CharLattice]]] = []
    basis: list[float] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(':')
        if not sep:
            raise LatticeFormatError(f'Line {lineno}: expected "key: values"')
        try:
            numbers = [float(token) for token in value.split()]
        except ValueError as e:
            raise LatticeFormatError(f'Line {lineno}: expected real numbers') from e
        match key.strip().lower():
            case 'covolume':
                if len(numbers) != 1:
                    raise LatticeFormatError(f'Line {lineno}: covolume needs one number')
                cusps.append((numbers[0], []))
            case 'basis':
                if len(numbers) != 4:
                    raise LatticeFormatError(f'Line {lineno}: basis needs four numbers')
                basis = numbers
            case 'alpha':
                if len(numbers) != 2 or basis is None:
                    raise LatticeFormatError(f'Line {lineno}: alpha needs two numbers after a basis line')
                if not cusps:
                    cusps.append((None, []))
                matrix = [[basis[0], basis[2]], [basis[1], basis[3]]]
                cusps[-1][1].append(CharLattice(basis=matrix, alpha=(numbers[0], numbers[1])))
            case other:
                raise LatticeFormatError(f'Line {lineno}: unknown key {other!r}')
    result = []
    for covolume, lattices in cusps:
        if not lattices:
            raise LatticeFormatError('A cusp lists no characters')
        result.append(CuspData(
            lattices=lattices,
            covolume=covolume if covolume is not None else lattices[0].covolume,
        ))
    return result
