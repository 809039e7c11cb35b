"""Tests for truncated power and Laurent series."""

import pytest

from qtoric.algebra.elements import NSymmElement, TensorElement
from qtoric.algebra.series import (
    INTEGERS,
    NSYMM,
    TENSOR,
    NCLaurentSeries,
    NCSeries,
    SeriesRing,
    laurent_residue,
    series_multiply,
    series_substitute,
)
from qtoric.errors import ArgumentError
from qtoric.services.hopf_service import z_series

Z = NSymmElement.word


class TestNCSeries:
    """Test cases for truncated power series."""

    def test_drops_terms_above_order(self):
        """Test that exponents above the truncation order are discarded."""
        f = NCSeries(INTEGERS, {0: 1, 3: 5, 4: 7}, 3)
        assert f.items() == [(0, 1), (3, 5)]

    def test_unknown_coefficient(self):
        """Test that coefficients beyond the order are not available."""
        f = NCSeries.variable(INTEGERS, 2)
        with pytest.raises(ArgumentError):
            f.coefficient(3)

    def test_rejects_foreign_coefficients(self):
        """Test that coefficients must lie in the ring."""
        with pytest.raises(ArgumentError):
            NCSeries(INTEGERS, {1: Z((1,))}, 3)

    def test_t_times_t(self):
        """Test (t)(t) = t^2."""
        t = NCSeries.variable(INTEGERS, 4)
        assert series_multiply(t, t) == NCSeries(INTEGERS, {2: 1}, 4)

    def test_square_of_z_series(self):
        """Test the t^3 coefficient of Z(t)^2 is 2 Z_1."""
        z = z_series(4)
        assert (z * z).coefficient(3) == Z((1,), 2)

    def test_product_is_ordered(self):
        """Test coefficients multiply in the written order."""
        f = NCSeries(NSYMM, {1: Z((1,))}, 3)
        g = NCSeries(NSYMM, {1: Z((2,))}, 3)
        assert (f * g).coefficient(2) == Z((1, 2))
        assert (g * f).coefficient(2) == Z((2, 1))

    def test_unit(self):
        """Test f · 1 = f."""
        f = NCSeries(INTEGERS, {1: 2, 2: -1}, 3)
        one = NCSeries.constant(INTEGERS, 1, 3)
        assert f * one == f

    def test_min_order(self):
        """Test products are truncated at the smaller order."""
        f = NCSeries.variable(INTEGERS, 5)
        g = NCSeries.variable(INTEGERS, 2)
        assert (f * g).order == 2
        assert (f + g).order == 2

    def test_ring_mismatch(self):
        """Test combining series over different rings fails."""
        with pytest.raises(ArgumentError):
            series_multiply(NCSeries.variable(INTEGERS, 2), NCSeries.variable(NSYMM, 2))

    def test_power(self):
        """Test powers by repeated multiplication."""
        f = NCSeries(INTEGERS, {0: 1, 1: 1}, 4)
        assert f.power(3) == NCSeries.from_list(INTEGERS, [1, 3, 3, 1, 0])
        assert f.power(0) == NCSeries.constant(INTEGERS, 1, 4)

    def test_change_ring(self):
        """Test integer series embed into NSymm."""
        f = NCSeries(INTEGERS, {1: 2}, 2)
        assert f.change_ring(NSYMM).coefficient(1) == NSymmElement.from_int(2)

    def test_truncate_cannot_extend(self):
        """Test truncation never raises the order."""
        with pytest.raises(ArgumentError):
            NCSeries.variable(INTEGERS, 2).truncate(3)

    def test_series_ring_coefficients(self):
        """Test series with series coefficients."""
        ring = SeriesRing(TENSOR, 2)
        inner = NCSeries.variable(TENSOR, 2)
        outer = NCSeries(ring, {1: inner}, 3)
        assert (outer * outer).coefficient(2) == inner * inner


class TestSeriesSubstitute:
    """Test cases for series composition."""

    def test_square_of_shift(self):
        """Test t^2 ∘ (t + t^2) = t^2 + 2t^3 + t^4."""
        f = NCSeries(INTEGERS, {2: 1}, 5)
        g = NCSeries(INTEGERS, {1: 1, 2: 1}, 5)
        assert series_substitute(f, g) == NCSeries(INTEGERS, {2: 1, 3: 2, 4: 1}, 5)

    def test_identity_substitution(self):
        """Test f ∘ t = f."""
        f = NCSeries(INTEGERS, {0: 3, 1: -1, 3: 4}, 4)
        assert series_substitute(f, NCSeries.variable(INTEGERS, 4)) == f

    def test_substitute_into_t(self):
        """Test t ∘ Z(t) = Z(t)."""
        z = z_series(5)
        assert series_substitute(NCSeries.variable(NSYMM, 5), z) == z

    def test_nonzero_constant_term(self):
        """Test the inner series must vanish at zero."""
        f = NCSeries.variable(INTEGERS, 3)
        g = NCSeries(INTEGERS, {0: 1, 1: 1}, 3)
        with pytest.raises(ArgumentError):
            series_substitute(f, g)


class TestLaurentSeries:
    """Test cases for Laurent series and residues."""

    def test_residue_examples(self):
        """Test residues of simple Laurent series."""
        assert laurent_residue(NCLaurentSeries(INTEGERS, {-1: 1}, 0, pole_bound=1)) == 1
        assert laurent_residue(NCLaurentSeries(INTEGERS, {3: 1}, 3)) == 0
        assert NCLaurentSeries(INTEGERS, {-2: 5, -1: 7, 1: 1}, 1, pole_bound=2).residue() == 7

    def test_pole_bound(self):
        """Test poles deeper than the bound are rejected."""
        with pytest.raises(ArgumentError):
            NCLaurentSeries(INTEGERS, {-3: 1}, 0, pole_bound=2)

    def test_valuation_aware_product_order(self):
        """Test the product order min(order_f + val_g, order_g + val_f)."""
        f = NCLaurentSeries(INTEGERS, {1: 1}, 4)
        g = NCLaurentSeries(INTEGERS, {-3: 1, -1: 2}, 0, pole_bound=3)
        product = f * g
        assert product.order == 1
        assert product.residue() == 0
        assert product.coefficient(-2) == 1

    def test_from_series(self):
        """Test viewing a power series as a Laurent series."""
        f = NCSeries(TENSOR, {1: TensorElement.one()}, 2)
        laurent = NCLaurentSeries.from_series(f)
        assert laurent.coefficient(1) == TensorElement.one()
        assert laurent.pole_bound == 0
