# -*- coding: utf-8 -*-
'''Shape parameters of ideal tetrahedra
'''
from pydantic import BaseModel, Field, validator

from ..errors.analysis import EmptyShapeList
from ..formatting import parse_complex
from ..validators import Shape


class ShapeList(BaseModel):
    '''Cross ratios z_i of a positively oriented ideal triangulation

    Attributes:
        shapes (list[complex]): Shapes with Im z_i > 0.
    '''
    shapes: list[complex] = Field(..., description='Cross ratios')

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator('shapes', pre=True)
    def upper_half_plane(cls, value):
        shapes = [complex(z) for z in value]
        if not shapes:
            raise EmptyShapeList('No shape parameters given')
        for z in shapes:
            Shape.validate(z)
        return shapes

    def __len__(self) -> int:
        return len(self.shapes)

    @classmethod
    def parse(cls, text: str) -> 'ShapeList':
        '''Parse ``re,im;re,im;...``

        Raises:
            EmptyShapeList: If no shape is given.
            DegenerateShape: If a shape has Im z ≤ 0.
        '''
        return cls(shapes=[parse_complex(part) for part in text.split(';') if part.strip()])
