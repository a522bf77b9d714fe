# -*- coding: utf-8 -*-
'''Base exceptions of the ruelle package

Every exception raised by the package derives from `RuelleError` and from
exactly one category, which decides the CLI exit code.
'''


class RuelleError(Exception):
    '''Base ruelle exception
    '''
    exit_code: int = 1


class InputError(RuelleError):
    '''Malformed input: file format, tokens, shapes or dimensions
    '''
    exit_code = 2


class MathDomainError(RuelleError):
    '''A mathematical precondition of an operation does not hold
    '''
    exit_code = 3


class ToleranceError(RuelleError):
    '''A numerical tolerance or conditioning check failed
    '''
    exit_code = 4
