"""Closed-form spectra, delta binning, weighted classes, statistics, families."""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyspec import (
    ExponentOutOfRange,
    FracPoly,
    NotReduced,
    delta_to_ehrhart,
    is_unimodal,
    spectrum_is_integral,
    spectrum_reduced_simplex,
    spectrum_stats,
    spectrum_to_delta,
    toric_spectrum_box,
    toric_spectrum_reeve,
    weighted_delta_decomposition,
)

from conftest import SPEC_3D, SPEC_4D, SPEC_9D, SPEC_SKEW


class TestClosedFormSpectrum:
    def test_dim4(self):
        assert spectrum_reduced_simplex((1, 1, 1, 1, 5)) == SPEC_4D

    def test_skew_triangle(self):
        # Exponent sequence 0, 1, 2, 1 collected with multiplicity.
        assert spectrum_reduced_simplex((1, 1, 2)) == SPEC_SKEW

    def test_3d(self):
        assert spectrum_reduced_simplex((2, 2, 3, 4)) == SPEC_3D

    def test_dim9(self):
        assert spectrum_reduced_simplex((1,) * 9 + (3,)) == SPEC_9D

    def test_order_of_weights_is_irrelevant(self):
        assert spectrum_reduced_simplex((5, 1, 1, 1, 1)) == SPEC_4D

    def test_not_reduced_refused(self):
        with pytest.raises(NotReduced):
            spectrum_reduced_simplex((4, 4, 4))
        with pytest.raises(NotReduced):
            spectrum_reduced_simplex((2, 2, 2, 4))

    @given(st.lists(st.integers(min_value=1, max_value=7), min_size=2, max_size=5))
    def test_symmetry_and_total(self, partial):
        # Appending 1 forces coprimality; every coprime tuple is a valid
        # weight vector.
        weights = tuple(partial) + (1,)
        n = len(weights) - 1
        spec = spectrum_reduced_simplex(weights)
        assert spec.reflect(n) == spec
        assert spec.total() == sum(weights)
        assert all(0 <= e <= n for e in spec.exponents())


class TestSpectrumToDelta:
    def test_dim4(self):
        assert spectrum_to_delta(SPEC_4D, 4) == (1, 2, 2, 2, 2)

    def test_3d(self):
        assert spectrum_to_delta(SPEC_3D, 3) == (1, 2, 6, 2)

    def test_integral_bins_one_to_one(self):
        assert spectrum_to_delta(FracPoly({0: 1, 1: 1, 2: 1}), 2) == (1, 1, 1)

    def test_negative_exponent_rejected(self):
        with pytest.raises(ExponentOutOfRange):
            spectrum_to_delta(FracPoly({F(-1, 2): 1}), 2)

    def test_exponent_above_n_rejected(self):
        with pytest.raises(ExponentOutOfRange):
            spectrum_to_delta(FracPoly({3: 1}), 2)


class TestWeightedDecomposition:
    def test_dim4_classes(self):
        classes = weighted_delta_decomposition(SPEC_4D, 4)
        assert classes == {
            F(0): FracPoly({0: 1, 1: 1, 2: 1, 3: 1, 4: 1}),
            F(-1, 5): FracPoly({1: 1}),
            F(-2, 5): FracPoly({2: 1}),
            F(-3, 5): FracPoly({3: 1}),
            F(-4, 5): FracPoly({4: 1}),
        }

    def test_keys_descend_from_zero(self):
        classes = weighted_delta_decomposition(SPEC_4D, 4)
        keys = list(classes)
        assert keys == sorted(keys, reverse=True)
        assert keys[0] == 0

    def test_integral_spectrum_single_class(self):
        spec = FracPoly({0: 1, 1: 2, 2: 1})
        assert weighted_delta_decomposition(spec, 2) == {F(0): spec}

    @pytest.mark.parametrize("spec,n", [(SPEC_4D, 4), (SPEC_3D, 3), (SPEC_9D, 9)])
    def test_classes_rebuild_delta(self, spec, n):
        classes = weighted_delta_decomposition(spec, n)
        total = FracPoly()
        for part in classes.values():
            total = total + part
        assert total == FracPoly({F(k): d for k, d in enumerate(spectrum_to_delta(spec, n))})

    @pytest.mark.parametrize("spec,n", [(SPEC_4D, 4), (SPEC_3D, 3)])
    def test_classes_have_integer_exponents_up_to_n(self, spec, n):
        for alpha, part in weighted_delta_decomposition(spec, n).items():
            assert -1 < alpha <= 0
            for e, c in part.terms():
                assert e.denominator == 1 and 0 <= e <= n
                assert c > 0


class TestIsIntegral:
    def test_dim9_integral(self):
        assert spectrum_is_integral(SPEC_9D)

    def test_dim4_not_integral(self):
        assert not spectrum_is_integral(SPEC_4D)

    def test_empty_vacuous(self):
        assert spectrum_is_integral(FracPoly())


class TestStats:
    def test_dim9(self):
        report = spectrum_stats(SPEC_9D, 9)
        assert report.mu == 12
        assert report.mean == F(9, 2)
        assert report.is_integral
        assert report.unimodal_integer_part is False

    def test_small_integral(self):
        report = spectrum_stats(FracPoly({0: 1, 1: 1, 2: 1}), 2)
        assert report.mean == 1
        assert report.variance == F(2, 3)
        assert report.unimodal_integer_part is True

    def test_single_central_term(self):
        report = spectrum_stats(FracPoly({F(3, 2): 1}), 3)
        assert report.variance == 0

    def test_non_integral_reports_not_applicable(self):
        report = spectrum_stats(SPEC_4D, 4)
        assert report.unimodal_integer_part is None
        assert not report.is_integral

    def test_variance_bound_reported(self):
        report = spectrum_stats(SPEC_9D, 9)
        assert report.variance == F(349, 48)
        assert report.variance_at_least_n_over_12 is True

    def test_empty_spectrum_rejected(self):
        with pytest.raises(ValueError):
            spectrum_stats(FracPoly(), 2)


class TestIsUnimodal:
    def test_rises_then_falls(self):
        assert is_unimodal([1, 2, 5, 5, 3])

    def test_double_peak(self):
        assert not is_unimodal([1, 2, 1, 2, 1])

    def test_monotone(self):
        assert is_unimodal([1, 2, 3])
        assert is_unimodal([3, 2, 1])


def _det3(a, b, c):
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


class TestToricFamilies:
    def test_box_233(self):
        assert spectrum_to_delta(toric_spectrum_box((2, 3, 3)), 3) == (1, 10, 7, 0)

    def test_box_standard_simplex(self):
        spec = toric_spectrum_box((1, 1, 1))
        assert spec == FracPoly({0: 1})
        assert spectrum_to_delta(spec, 3) == (1, 0, 0, 0)

    def test_box_single_factor(self):
        assert toric_spectrum_box((2,)) == FracPoly({0: 1, F(1, 2): 1})

    def test_box_total_is_product(self):
        assert toric_spectrum_box((2, 3, 3)).total() == 18
        assert toric_spectrum_box((4, 5)).total() == 20

    def test_box_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            toric_spectrum_box((2, 0))
        with pytest.raises(ValueError):
            toric_spectrum_box(())

    def test_reeve_h2(self):
        spec = toric_spectrum_reeve(2)
        assert spec == FracPoly({0: 1, 1: 1, F(3, 2): 1, 2: 1})
        assert spectrum_to_delta(spec, 3) == (1, 1, 2, 0)

    @pytest.mark.parametrize("h", [2, 5, 13, 14, 20])
    def test_reeve_delta_and_linear_coefficient(self, h):
        spec = toric_spectrum_reeve(h)
        delta = spectrum_to_delta(spec, 3)
        assert delta == (1, 1, h, 0)
        poly = delta_to_ehrhart(delta, 3)
        assert poly.coefficient(1) == F(13 - h, 6)
        assert (poly.coefficient(1) < 0) == (h >= 14)

    def test_reeve_h5_total_is_normalized_volume(self):
        # Normalized volume of the hull of 0, e1, e2, e3, (1, 1, 5):
        # split off the standard tetrahedron and the tetrahedron on
        # e1, e2, e3, (1, 1, 5).
        apex = (1, 1, 5)
        e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
        diff = lambda p, q: tuple(a - b for a, b in zip(p, q))
        vol6 = abs(_det3(e1, e2, e3)) + abs(
            _det3(diff(e2, e1), diff(e3, e1), diff(apex, e1))
        )
        assert vol6 == 7
        assert toric_spectrum_reeve(5).total() == vol6

    def test_reeve_rejects_small_h(self):
        with pytest.raises(ValueError):
            toric_spectrum_reeve(1)
