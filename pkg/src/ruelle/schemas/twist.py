# -*- coding: utf-8 -*-
'''Twist data: unitary representations of a finitely presented group

Twist file format::

    rank: 1
    char: -1 0

or, for a rank r matrix representation, r lines of 2r reals per generator
(row-major re/im pairs), blocks separated optionally by ``gen: <name>``::

    rank: 2
    gen: x
    0.5 0.5 0.5 0.5
    -0.5 0.5 0.5 -0.5
    gen: y
    ...
'''
import numpy as np
from pydantic import BaseModel, Field, validator, root_validator

from ..errors.topology import TwistFormatError, GeneratorIndexError, NotUnitary
from ..settings import get_settings
from ..validators import Unitary, UnitCharacter


class TwistData(BaseModel):
    '''Unitary representation ρ, as per-generator matrices or a character

    Attributes:
        rank (int): Degree r of the representation.
        images (list[np.ndarray], optional): r×r unitary image of each generator.
        character (complex, optional): ξ with ρ(x_i) = ξ for every generator.

    Note:
        Exactly one of `images` and `character` is set. A character twist is
        generator independent and always has rank 1.
    '''
    rank: int = Field(..., gt=0, description='Degree of the representation')
    images: list[np.ndarray] | None = Field(None, description='Generator images')
    character: complex | None = Field(None, description='Rank-1 character value')

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator('character', pre=True)
    def coerce_character(cls, value):
        if value is None:
            return None
        value = complex(value)
        UnitCharacter.validate(value)
        return value

    @validator('images', pre=True)
    def coerce_images(cls, value):
        if value is None:
            return None
        images = [np.array(image, dtype=complex) for image in value]
        tol = get_settings().unitarity_tol
        for index, image in enumerate(images):
            try:
                Unitary.validate(image, tol)
            except NotUnitary as e:
                raise NotUnitary(f'Generator {index}: {e}') from e
            image.setflags(write=False)
        return images

    @root_validator(skip_on_failure=True)
    def one_mode(cls, values):
        images, character, rank = values.get('images'), values.get('character'), values.get('rank')
        if (images is None) == (character is None):
            raise ValueError('Exactly one of images and character must be given')
        if character is not None and rank != 1:
            raise ValueError('Character twists have rank 1')
        if images is not None and any(image.shape != (rank, rank) for image in images):
            raise ValueError(f'Every image must be {rank}x{rank}')
        return values

    @classmethod
    def from_character(cls, xi: complex) -> 'TwistData':
        return cls(rank=1, character=xi)

    @classmethod
    def trivial(cls, rank: int = 1) -> 'TwistData':
        if rank == 1:
            return cls.from_character(1.0)
        raise ValueError('Use from_images for higher rank trivial twists')

    @classmethod
    def from_images(cls, images: list) -> 'TwistData':
        images = [np.array(image, dtype=complex) for image in images]
        if not images:
            raise TwistFormatError('No generator images given')
        return cls(rank=images[0].shape[0], images=images)

    @property
    def is_character(self) -> bool:
        return self.character is not None

    @property
    def num_generators(self) -> int | None:
        '''Number of generator images, None for a character twist'''
        return None if self.images is None else len(self.images)

    def image(self, gen: int, exp: int = 1) -> np.ndarray:
        '''ρ(x_gen)^exp for exp = ±1, the inverse taken as conjugate transpose
        '''
        if self.character is not None:
            value = self.character if exp > 0 else self.character.conjugate()
            return np.array([[value]], dtype=complex)
        assert self.images is not None
        if not 0 <= gen < len(self.images):
            raise GeneratorIndexError(f'Twist has no image for generator {gen}')
        image = self.images[gen]
        return image if exp > 0 else image.conj().T

    def word_image(self, letters) -> np.ndarray:
        '''Product of generator images along a word's letters
        '''
        result = np.eye(self.rank, dtype=complex)
        for gen, exp in letters:
            result = result @ self.image(gen, exp)
        return result

    @classmethod
    def parse(cls, text: str) -> 'TwistData':
        '''Parse a twist file

        Args:
            text (str): File contents.

        Raises:
            TwistFormatError: If the file is malformed.
            NotUnitary: If an image is not unitary.

        Returns:
            TwistData: Twist
        '''
        rank: int | None = None
        character: complex | None = None
        rows: list[list[float]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition(':')
            if sep:
                match key.strip().lower():
                    case 'rank':
                        rank = _parse_int(value, lineno)
                    case 'char':
                        numbers = _parse_floats(value, lineno)
                        if len(numbers) != 2:
                            raise TwistFormatError(f'Line {lineno}: char needs "re im"')
                        character = complex(numbers[0], numbers[1])
                    case 'gen':
                        continue
                    case other:
                        raise TwistFormatError(f'Line {lineno}: unknown key {other!r}')
            else:
                rows.append(_parse_floats(line, lineno))
        if rank is None:
            raise TwistFormatError('Missing "rank:" line')
        if character is not None:
            if rows:
                raise TwistFormatError('A character twist cannot also list matrices')
            return cls(rank=rank, character=character)
        if not rows or len(rows) % rank:
            raise TwistFormatError(f'Matrix lines must come in blocks of {rank}')
        for lineno, row in enumerate(rows):
            if len(row) != 2 * rank:
                raise TwistFormatError(f'Matrix row {lineno} needs {2 * rank} reals')
        images = []
        for start in range(0, len(rows), rank):
            block = np.array(rows[start:start + rank])
            images.append(block[:, 0::2] + 1j * block[:, 1::2])
        return cls(rank=rank, images=images)


def _parse_int(value: str, lineno: int) -> int:
    try:
        return int(value.strip())
    except ValueError as e:
        raise TwistFormatError(f'Line {lineno}: expected an integer') from e


def _parse_floats(value: str, lineno: int) -> list[float]:
    try:
        return [float(token) for token in value.split()]
    except ValueError as e:
        raise TwistFormatError(f'Line {lineno}: expected real numbers') from e
