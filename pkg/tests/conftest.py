# -*- coding: utf-8 -*-
import numpy as np
import pytest

from ruelle.schemas.spectrum import GeodesicEntry, LengthSpectrum, SyntheticSpectrum
from ruelle.schemas.twist import TwistData
from ruelle.topology.laurent import LaurentPoly
from ruelle.topology.presentation import Presentation, Word, parse_presentation
from ruelle.topology.torsion import random_unitary


TREFOIL = '''\
# trefoil, x y x = y x y
mode: wirtinger
gens: x y
rel: x y x Y X Y
'''

FIGURE_EIGHT = '''\
# figure-eight knot
mode: wirtinger
gens: x y
rel: y x Y x y X Y x Y X
'''


def quaternion(a: float, b: float, c: float, d: float) -> np.ndarray:
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


@pytest.fixture
def trefoil_text() -> str:
    return TREFOIL


@pytest.fixture
def figure_eight_text() -> str:
    return FIGURE_EIGHT


@pytest.fixture
def trefoil() -> Presentation:
    return parse_presentation(TREFOIL)


@pytest.fixture
def figure_eight() -> Presentation:
    return parse_presentation(FIGURE_EIGHT)


@pytest.fixture
def trefoil_alexander() -> LaurentPoly:
    return LaurentPoly.from_sequence([1, -1, 1])


@pytest.fixture
def figure_eight_alexander() -> LaurentPoly:
    return LaurentPoly.from_sequence([1, -3, 1])


@pytest.fixture
def su2_trefoil() -> TwistData:
    '''Irreducible SU(2) representation of the trefoil group, x ↦ p, y ↦ q with pqp = qpq'''
    return TwistData.from_images([
        quaternion(0.5, 0.5, 0.5, 0.5),
        quaternion(0.5, 0.5, -0.5, -0.5),
    ])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


def random_word(rng: np.random.Generator, generators: int, max_length: int) -> Word:
    length = int(rng.integers(0, max_length + 1))
    return Word(tuple(
        (int(rng.integers(0, generators)), int(rng.choice([-1, 1]))) for _ in range(length)
    ))


def random_wirtinger(rng: np.random.Generator, generators: int, rank: int) -> tuple[Presentation, TwistData]:
    '''Wirtinger-valid presentation with a genuine unitary representation

    Relators r_k = w·x_i·w⁻¹·x_k⁻¹ with i < k and w in x_0..x_{k−1}, and
    ρ(x_k) = ρ(w)ρ(x_i)ρ(w)*, so every relator maps to the identity.
    '''
    images = [random_unitary(rank, rng)]
    relators = []
    for k in range(1, generators):
        i = int(rng.integers(0, k))
        w = random_word(rng, k, 4)
        relators.append(w * Word.generator(i) * ~w * ~Word.generator(k))
        conjugator = np.eye(rank, dtype=complex)
        for gen, exp in w.letters:
            conjugator = conjugator @ (images[gen] if exp > 0 else images[gen].conj().T)
        images.append(conjugator @ images[i] @ conjugator.conj().T)
    names = tuple(f'x{index}' for index in range(generators))
    return Presentation(names, tuple(relators), wirtinger=True), TwistData.from_images(images)


@pytest.fixture
def wirtinger_factory(rng):
    return lambda generators, rank: random_wirtinger(rng, generators, rank)


@pytest.fixture
def synthetic_spectrum() -> LengthSpectrum:
    '''Two primitive geodesics with their powers up to k = 10, rank-1 twist'''
    entries = []
    for l0, theta, xi in ((1.1, 0.3, -1.0), (1.7, 1.2, np.exp(0.4j))):
        for k in range(1, 11):
            entries.append(GeodesicEntry(l0=l0, k=k, thetas=[k * theta], trace_rho=xi ** k))
    return LengthSpectrum(n=1, r=1, entries=entries)


@pytest.fixture
def five_entry_spectrum() -> LengthSpectrum:
    entries = [
        GeodesicEntry(l0=1.0, k=1, thetas=[0.0], trace_rho=1.0),
        GeodesicEntry(l0=1.3, k=1, thetas=[0.7], trace_rho=-1.0),
        GeodesicEntry(l0=1.0, k=2, thetas=[0.0], trace_rho=1.0),
        GeodesicEntry(l0=2.1, k=1, thetas=[2.0], trace_rho=1.0),
        GeodesicEntry(l0=1.3, k=2, thetas=[1.4], trace_rho=1.0),
    ]
    return LengthSpectrum(n=1, r=1, entries=entries)


@pytest.fixture
def laplace_spectrum() -> SyntheticSpectrum:
    return SyntheticSpectrum(eigenvalues={0: [0.5, 2.0, 4.5], 1: [1.0, 2.5, 3.0, 7.0]})
