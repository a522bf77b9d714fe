# -*- coding: utf-8 -*-
import numpy as np
import pytest

from ruelle.errors.topology import GeneratorIndexError, NotARepresentation, RankMismatch, WirtingerViolation
from ruelle.schemas.twist import TwistData
from ruelle.topology.alexander import alexander
from ruelle.topology.foxcalc import GroupRingElement, boundary_matrices, fox_derivative, phi
from ruelle.topology.laurent import LaurentPoly
from ruelle.topology.presentation import Presentation, Word
from ruelle.topology.torsion import random_unitary

from .conftest import random_word

GENERATORS = 5


def test_generator_derivatives():
    x = Word.generator(0)
    assert fox_derivative(x, 0) == GroupRingElement.one()
    assert fox_derivative(x, 1, 2).is_zero()
    assert fox_derivative(~x, 0) == GroupRingElement.from_word(~x, -1.0)


def test_leibniz(rng):
    for _ in range(200):
        u, v = random_word(rng, GENERATORS, 30), random_word(rng, GENERATORS, 30)
        for i in range(GENERATORS):
            left = fox_derivative(u * v, i, GENERATORS)
            right = fox_derivative(u, i, GENERATORS) \
                + GroupRingElement.from_word(u) * fox_derivative(v, i, GENERATORS)
            assert left.allclose(right, 1e-12)


def test_fundamental_identity(rng):
    one = GroupRingElement.one()
    for _ in range(200):
        w = random_word(rng, GENERATORS, 30)
        total = GroupRingElement()
        for i in range(GENERATORS):
            total = total + fox_derivative(w, i, GENERATORS) * (GroupRingElement.from_word(Word.generator(i)) - one)
        assert total.allclose(GroupRingElement.from_word(w) - one, 1e-12)


def test_index_out_of_range():
    with pytest.raises(GeneratorIndexError):
        fox_derivative(Word.generator(0), 3, 2)


def test_phi_character():
    rho = TwistData.from_character(-1)
    element = GroupRingElement.from_word(Word.from_pairs([(0, 2), (1, -1)]), 2.0)
    image = phi(element, rho)
    assert image.shape == (1, 1)
    assert image[0, 0].allclose(LaurentPoly.monomial(-2.0, 1))


def test_phi_rank_mismatch(su2_trefoil):
    with pytest.raises(RankMismatch):
        phi(GroupRingElement.one(), su2_trefoil, rank=3)


@pytest.mark.parametrize('rank', [1, 2, 3])
def test_chain_property(wirtinger_factory, rng, rank):
    for _ in range(7):
        presentation, rho = wirtinger_factory(int(rng.integers(2, 5)), rank)
        d2, d1 = boundary_matrices(presentation, rho)
        assert d2.shape == ((presentation.num_generators - 1) * rank, presentation.num_generators * rank)
        product = d2 @ d1
        for t in (1.0, 0.5 - 0.2j, np.exp(1.3j)):
            assert np.abs(product.evaluate(t)).max() < 1e-9


def test_boundary_needs_wirtinger_count():
    p = Presentation(('x', 'y'), ())
    with pytest.raises(WirtingerViolation):
        boundary_matrices(p, TwistData.from_character(-1))


def test_boundary_needs_enough_images(trefoil):
    rho = TwistData.from_images([np.eye(2)])
    with pytest.raises(GeneratorIndexError):
        boundary_matrices(trefoil, rho)


def test_boundary_needs_a_representation(trefoil, su2_trefoil, rng):
    p = su2_trefoil.image(0)
    twisted = TwistData.from_images([p, p.conj().T])
    with pytest.raises(NotARepresentation):
        boundary_matrices(trefoil, twisted)
    with pytest.raises(NotARepresentation):
        alexander(trefoil, TwistData.from_images([random_unitary(2, rng), random_unitary(2, rng)]))
    unbalanced = Presentation(('x', 'y'), (Word(((0, 1), (0, 1), (1, -1))),), wirtinger=False)
    with pytest.raises(NotARepresentation):
        boundary_matrices(unbalanced, TwistData.from_character(-1))
    boundary_matrices(unbalanced, TwistData.from_character(1))


def random_element(rng: np.random.Generator, generators: int) -> GroupRingElement:
    total = GroupRingElement()
    for _ in range(3):
        c = complex(rng.normal(), rng.normal())
        total = total + GroupRingElement.from_word(random_word(rng, generators, 8), c)
    return total


def test_phi_is_multiplicative(rng, su2_trefoil):
    for rho in (su2_trefoil, TwistData.from_character(np.exp(0.7j))):
        for _ in range(20):
            a, b = random_element(rng, 2), random_element(rng, 2)
            assert phi(a * b, rho).allclose(phi(a, rho) @ phi(b, rho), 1e-9)
            assert phi(a + b, rho).allclose(phi(a, rho) + phi(b, rho), 1e-9)
