# -*- coding: utf-8 -*-
'''Deterministic number formatting for reports
'''
import math

DIGITS = 12


def format_real(value: float, digits: int = DIGITS) -> str:
    '''Format a real number with fixed significant digits

    Args:
        value (float): Number
        digits (int, optional): Significant digits. Defaults to 12.

    Returns:
        str: Formatted number, ``-0`` printed as ``0``
    '''
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    text = f'{value:.{digits}g}'
    if float(text) == 0.0:
        return '0'
    return text


def format_complex(value: complex, digits: int = DIGITS) -> str:
    '''Format a complex number as ``re`` or ``re+imj``

    Args:
        value (complex): Number
        digits (int, optional): Significant digits. Defaults to 12.

    Returns:
        str: Formatted number
    '''
    value = complex(value)
    re = format_real(value.real, digits)
    im = format_real(value.imag, digits)
    if im == '0':
        return re
    sign = '' if im.startswith('-') else '+'
    return f'{re}{sign}{im}j'


def parse_complex(text: str) -> complex:
    '''Parse a shell-safe ``re,im`` pair (``re`` alone is accepted)

    Args:
        text (str): Pair

    Raises:
        ValueError: If the text is not one or two numbers

    Returns:
        complex: Parsed number
    '''
    parts = [part.strip() for part in text.split(',')]
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f'Expected "re,im", got {text!r}')
