# -*- coding: utf-8 -*-
'''Finitely presented groups and free-group words

Presentation file format (UTF-8, line based)::

    # comment
    mode: wirtinger
    gens: x y
    rel: x y x Y X Y

A lowercase token is a generator, its uppercase form is the inverse.
When every generator name is a single letter, a relator token may also be
a run of letters (``rel: xyxYXY``).
'''
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors.topology import (
    PresentationFormatError, UnknownGenerator, EmptyRelator,
    WirtingerViolation, GeneratorIndexError
)
from ..validators import GeneratorName


log = logging.getLogger('Presentation')

Letter = tuple[int, int]


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, exp in letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    '''Freely reduced word of a free group

    Attributes:
        letters (tuple[tuple[int, int], ...]): Pairs (generator index, ±1).
    '''
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for gen, exp in self.letters:
            if gen < 0:
                raise GeneratorIndexError(f'Negative generator index {gen}')
            if exp not in (1, -1):
                raise ValueError(f'Letter exponent must be ±1, got {exp}')
        object.__setattr__(self, 'letters', _reduce(self.letters))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> 'Word':
        '''Build a reduced word from (generator, exponent) pairs

        Args:
            pairs (Iterable[Sequence[int]]): Letters, exponents may be any
                nonzero integer and are expanded into ±1 letters.

        Returns:
            Word: Reduced word
        '''
        letters: list[Letter] = []
        for gen, exp in pairs:
            sign = 1 if exp > 0 else -1
            letters.extend([(gen, sign)] * abs(exp))
        return cls(tuple(letters))

    @classmethod
    def generator(cls, index: int) -> 'Word':
        return cls(((index, 1),))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: 'Word') -> 'Word':
        return multiply(self, other)

    def __invert__(self) -> 'Word':
        return Word(tuple((gen, -exp) for gen, exp in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def max_generator(self) -> int:
        '''Largest generator index used, -1 for the empty word
        '''
        return max((gen for gen, _ in self.letters), default=-1)

    def exponent_sum(self) -> int:
        return sum(exp for _, exp in self.letters)

    def prefixes(self):
        '''Iterate over (prefix, letter) pairs, prefix excluding the letter
        '''
        for position, letter in enumerate(self.letters):
            yield Word(self.letters[:position]), letter


def multiply(u: Word, v: Word) -> Word:
    '''Multiply two words with free reduction

    Args:
        u (Word): Left factor.
        v (Word): Right factor.

    Returns:
        Word: Reduced product u·v
    '''
    return Word(u.letters + v.letters)


@dataclass(frozen=True)
class Presentation:
    '''Finitely presented group

    Attributes:
        generator_names (tuple[str, ...]): Distinct lowercase generator tokens.
        relators (tuple[Word, ...]): Reduced nonempty relators.
        wirtinger (bool): Whether the Wirtinger invariants were enforced.
    '''
    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]
    wirtinger: bool = False

    def __post_init__(self):
        if not self.generator_names:
            raise PresentationFormatError('Presentation needs at least one generator')
        if len(set(self.generator_names)) != len(self.generator_names):
            raise PresentationFormatError('Generator names must be distinct')
        for index, relator in enumerate(self.relators):
            if relator.is_identity():
                raise EmptyRelator(f'Relator {index} is empty after reduction')
            if relator.max_generator() >= self.num_generators:
                raise GeneratorIndexError(
                    f'Relator {index} uses generator {relator.max_generator()}'
                    f' but only {self.num_generators} are declared'
                )
        if self.wirtinger:
            validate_wirtinger(self)

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    def generator(self, index: int) -> Word:
        if not 0 <= index < self.num_generators:
            raise GeneratorIndexError(f'Generator index {index} out of range')
        return Word.generator(index)

    def word(self, text: str) -> Word:
        '''Parse a word written with the generator tokens

        Args:
            text (str): Tokens, e.g. ``"x y X"``.

        Raises:
            UnknownGenerator: If a token is not a generator or its inverse.

        Returns:
            Word: Reduced word
        '''
        return Word(tuple(_parse_tokens(text.split(), self.generator_names)))

    def format_word(self, word: Word) -> str:
        return ' '.join(
            self.generator_names[gen] if exp > 0 else self.generator_names[gen].upper()
            for gen, exp in word.letters
        )


def validate_wirtinger(p: Presentation) -> None:
    '''Check the Wirtinger invariants

    Args:
        p (Presentation): Presentation to check.

    Raises:
        WirtingerViolation: If the relator count is not n − 1 or a relator
            has nonzero exponent sum.
    '''
    if len(p.relators) != p.num_generators - 1:
        raise WirtingerViolation(
            f'Wirtinger presentation needs {p.num_generators - 1} relators, '
            f'got {len(p.relators)}'
        )
    for index, relator in enumerate(p.relators):
        total = relator.exponent_sum()
        if total != 0:
            raise WirtingerViolation(
                f'Relator {index} has exponent sum {total}, expected 0'
            )


def abelianize(p: Presentation, w: Word) -> int:
    '''Image of a word under the Hurewicz map x_i ↦ t

    Args:
        p (Presentation): Wirtinger presentation owning the word.
        w (Word): Word.

    Returns:
        int: Power of t
    '''
    if w.max_generator() >= p.num_generators:
        raise GeneratorIndexError('Word uses a generator outside the presentation')
    return w.exponent_sum()


def _parse_tokens(tokens: list[str], names: Sequence[str]) -> list[Letter]:
    lookup: dict[str, Letter] = {}
    for index, name in enumerate(names):
        lookup[name] = (index, 1)
        lookup[name.upper()] = (index, -1)
    single_letter = all(len(name) == 1 for name in names)
    letters: list[Letter] = []
    for token in tokens:
        if token in lookup:
            letters.append(lookup[token])
        elif single_letter and all(char in lookup for char in token):
            letters.extend(lookup[char] for char in token)
        else:
            raise UnknownGenerator(f'Unknown generator token {token!r}')
    return letters


def parse_presentation(text: str, wirtinger: bool | None = None) -> Presentation:
    '''Parse a presentation file

    Args:
        text (str): File contents.
        wirtinger (bool, optional): Force Wirtinger validation on or off.
            Defaults to None, which follows the ``mode:`` header.

    Raises:
        PresentationFormatError: If the file structure is invalid.
        UnknownGenerator: If a relator uses an undeclared token.
        EmptyRelator: If a relator reduces to the empty word.
        WirtingerViolation: If Wirtinger mode is on and violated.

    Returns:
        Presentation: Parsed presentation
    '''
    names: tuple[str, ...] | None = None
    relator_tokens: list[list[str]] = []
    mode_wirtinger = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(':')
        if not sep:
            raise PresentationFormatError(f'Line {lineno}: expected "key: value"')
        match key.strip().lower():
            case 'mode':
                mode = value.strip().lower()
                if mode != 'wirtinger':
                    raise PresentationFormatError(f'Line {lineno}: unknown mode {mode!r}')
                mode_wirtinger = True
            case 'gens':
                if names is not None:
                    raise PresentationFormatError(f'Line {lineno}: duplicate gens line')
                names = tuple(value.split())
                for name in names:
                    GeneratorName.validate(name)
            case 'rel':
                if names is None:
                    raise PresentationFormatError(f'Line {lineno}: rel before gens')
                tokens = value.split()
                if not tokens:
                    raise EmptyRelator(f'Line {lineno}: empty relator')
                relator_tokens.append(tokens)
            case other:
                raise PresentationFormatError(f'Line {lineno}: unknown key {other!r}')
    if names is None:
        raise PresentationFormatError('Missing "gens:" line')
    relators = tuple(Word(tuple(_parse_tokens(tokens, names))) for tokens in relator_tokens)
    if wirtinger is None:
        wirtinger = mode_wirtinger
    try:
        presentation = Presentation(names, relators, wirtinger)
    except (EmptyRelator, WirtingerViolation) as e:
        log.error(e)
        raise e
    log.debug('Parsed presentation with %d generators and %d relators',
              presentation.num_generators, len(presentation.relators))
    return presentation


def serialize(p: Presentation) -> str:
    '''Write a presentation in the file format read by `parse_presentation`

    Args:
        p (Presentation): Presentation.

    Returns:
        str: File contents
    '''
    lines = []
    if p.wirtinger:
        lines.append('mode: wirtinger')
    lines.append('gens: ' + ' '.join(p.generator_names))
    for relator in p.relators:
        lines.append('rel: ' + p.format_word(relator))
    return '\n'.join(lines) + '\n'
