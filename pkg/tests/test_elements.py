"""Tests for NSymm, QSymm and tensor elements."""

import random

import pytest

from qtoric.algebra.compositions import EMPTY, Composition, compositions_of
from qtoric.algebra.elements import (
    NSymmElement,
    QSymmElement,
    TensorElement,
    counit_nsymm,
    counit_tensor_left,
    counit_tensor_right,
    deconcatenation_coproduct,
    nsymm_multiply,
    pairing,
    tensor_pairing,
)

Z = NSymmElement.word
M = QSymmElement.monomial


def random_element(rng: random.Random, max_weight: int) -> NSymmElement:
    """A random integer combination of words of weight at most ``max_weight``."""
    terms = {}
    for _ in range(rng.randint(1, 4)):
        weight = rng.randint(0, max_weight)
        alpha = rng.choice(compositions_of(weight))
        terms[alpha] = rng.randint(-3, 3)
    return NSymmElement(terms)


class TestNSymmElement:
    """Test cases for NSymm arithmetic."""

    def test_zero_terms_are_pruned(self):
        """Test that zero coefficients never survive construction."""
        a = NSymmElement({(1,): 2, (2,): 0})
        assert a.terms == {Composition.of(1): 2}
        assert not (Z((1,)) - Z((1,)))

    def test_unit(self):
        """Test the unit is the empty composition with coefficient one."""
        assert NSymmElement.one().terms == {EMPTY: 1}
        assert NSymmElement.generator(0) == NSymmElement.one()
        assert NSymmElement.one() == 1

    def test_concatenation_product(self):
        """Test products concatenate compositions."""
        assert nsymm_multiply(Z((1,)), Z((2, 1))) == Z((1, 2, 1))

    def test_bilinearity(self):
        """Test products distribute over sums."""
        assert (Z((1,)) + Z((2,))) * Z((1,)) == Z((1, 1)) + Z((2, 1))

    def test_unit_law(self):
        """Test the unit acts trivially."""
        assert NSymmElement.one() * Z((3,)) == Z((3,))
        assert Z((3,)) * NSymmElement.one() == Z((3,))

    def test_noncommutative(self):
        """Test that generators do not commute."""
        assert Z((1,)) * Z((2,)) != Z((2,)) * Z((1,))

    def test_integer_scaling(self):
        """Test scaling by integers from either side."""
        assert 3 * Z((1,)) == Z((1,), 3)
        assert Z((1,)) * -2 == Z((1,), -2)
        assert (Z((1,)) * 0).terms == {}

    def test_grading(self):
        """Test weights add under multiplication."""
        product = Z((2, 1)) * Z((1, 3))
        assert product.max_weight == 7
        assert product.homogeneous_component(7) == product

    def test_homogeneous_component(self):
        """Test extraction of one weight."""
        a = NSymmElement.one() + Z((1,)) + Z((2,), 5) + Z((1, 1))
        assert a.homogeneous_component(2) == Z((2,), 5) + Z((1, 1))
        assert a.homogeneous_component(3) == NSymmElement.zero()

    @pytest.mark.parametrize("seed", range(10))
    def test_associativity_and_units(self, seed):
        """Test associativity and unit laws on random elements."""
        rng = random.Random(seed)
        a, b, c = (random_element(rng, 3) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * NSymmElement.one() == a == NSymmElement.one() * a

    def test_rendering(self):
        """Test canonical text rendering."""
        assert str(-Z((2,)) + Z((1, 1), 2)) == "-Z2 + 2 Z1.Z1"
        assert str(NSymmElement.one() + Z((1,), -1)) == "1 - Z1"
        assert str(NSymmElement.zero()) == "0"

    def test_hashable(self):
        """Test equal elements hash equally."""
        assert hash(Z((1, 2)) + Z((3,))) == hash(Z((3,)) + Z((1, 2)))


class TestTensorElement:
    """Test cases for tensor elements."""

    def test_componentwise_product(self):
        """Test multiplication concatenates each factor separately."""
        a = TensorElement.pure((1,), ())
        b = TensorElement.pure((), (1,))
        assert (a + b) * (a + b) == (
            TensorElement.pure((1, 1), ()) + TensorElement.pure((1,), (1,), 2) + TensorElement.pure((), (1, 1))
        )

    def test_embeddings(self):
        """Test the left and right embeddings of NSymm."""
        a = Z((2,)) + Z((1,), 3)
        assert TensorElement.left_embed(a) == TensorElement.pure((2,), ()) + TensorElement.pure((1,), (), 3)
        assert TensorElement.right_embed(a) == TensorElement.pure((), (2,)) + TensorElement.pure((), (1,), 3)

    def test_rendering_descending(self):
        """Test that tensor terms print in descending lexicographic order."""
        t = TensorElement.pure((), (2,)) + TensorElement.pure((1,), (1,), 2) + TensorElement.pure((2,), ())
        assert str(t) == "Z2⊗1 + 2 Z1⊗Z1 + 1⊗Z2"
        assert str(TensorElement.one()) == "1⊗1"

    def test_counits(self):
        """Test the partial counits keep terms with a unit factor."""
        t = TensorElement.pure((2,), ()) + TensorElement.pure((1,), (1,), 2) + TensorElement.pure((), (2,))
        assert counit_tensor_left(t) == Z((2,))
        assert counit_tensor_right(t) == Z((2,))


class TestQSymmAndPairing:
    """Test cases for QSymm, the duality pairing and deconcatenation."""

    def test_pairing_examples(self):
        """Test the Kronecker pairing of words and monomials."""
        assert pairing(Z((2, 1)), M((2, 1))) == 1
        assert pairing(Z((2, 1)), M((1, 2))) == 0
        assert pairing(NSymmElement.one(), QSymmElement.one()) == 1

    def test_deconcatenation(self):
        """Test the deconcatenation coproduct of monomials."""
        assert deconcatenation_coproduct(M((2, 1))) == (
            TensorElement.pure((), (2, 1)) + TensorElement.pure((2,), (1,)) + TensorElement.pure((2, 1), ())
        )
        assert deconcatenation_coproduct(QSymmElement.one()) == TensorElement.one()
        assert len(deconcatenation_coproduct(M((1, 1, 1)))) == 4

    def test_rendering(self):
        """Test QSymm rendering."""
        assert str(M((2, 1)) + QSymmElement.one()) == "1 + M(2,1)"

    def test_counit(self):
        """Test the NSymm counit."""
        assert counit_nsymm(NSymmElement.one() + Z((2,), 3)) == 1
        assert counit_nsymm(Z((1, 1))) == 0
        assert counit_nsymm(NSymmElement.zero()) == 0

    def test_duality_exhaustive(self):
        """Test <Z_a Z_b, M_c> equals the deconcatenation pairing for weights up to 6."""
        for total in range(7):
            for gamma in compositions_of(total):
                split = deconcatenation_coproduct(M(gamma))
                for left_weight in range(total + 1):
                    for alpha in compositions_of(left_weight):
                        for beta in compositions_of(total - left_weight):
                            lhs = pairing(Z(alpha) * Z(beta), M(gamma))
                            rhs = tensor_pairing(TensorElement.pure(alpha, beta), split)
                            assert lhs == rhs
