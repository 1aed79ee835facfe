from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hpade.errors import InsufficientTruncation, LeadingZero
from hpade.series_core import (
    NEG_INFINITY,
    LaurentSeries,
    OrderBound,
    Polynomial,
    SeriesTuple,
    format_polynomial,
    poly_shift_mul_series,
    residual_order,
    series_add,
    series_reciprocal,
)

from oracles import oracle_shift_mul_coefficient

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=10)
coeff_lists = st.lists(rationals, min_size=0, max_size=5)
polynomials = coeff_lists.map(Polynomial)
series_values = st.builds(
    LaurentSeries,
    st.integers(min_value=-3, max_value=3),
    st.lists(rationals, min_size=1, max_size=6),
)


class TestPolynomial:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)

    def test_zero_polynomial_degree_is_sentinel(self):
        assert Polynomial([]).degree == NEG_INFINITY
        assert Polynomial([0, 0]).degree == NEG_INFINITY
        assert Polynomial([0, 0]).is_zero

    def test_degree_counts_from_zero(self):
        assert Polynomial([5]).degree == 0
        assert Polynomial([1, 0, 3]).degree == 2

    def test_getitem_beyond_length_is_zero(self):
        p = Polynomial([1, 2])
        assert p[5] == 0
        assert p[1] == 2

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Polynomial([0.5])

    def test_arithmetic(self):
        p = Polynomial([1, 1])
        q = Polynomial([0, -1])
        assert (p + q).coeffs == (1,)
        assert (p - q).coeffs == (1, 2)
        assert (-p).coeffs == (-1, -1)
        assert (p * q).coeffs == (0, -1, -1)
        assert p.scale(Fraction(1, 2)).coeffs == (Fraction(1, 2), Fraction(1, 2))
        assert p.shift(2).coeffs == (0, 0, 1, 1)

    @given(polynomials, polynomials, polynomials)
    def test_multiplication_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    def test_formatting_convention(self):
        assert format_polynomial(Polynomial([])) == "0"
        assert format_polynomial(Polynomial([1, -1])) == "1 - 1*z"
        assert format_polynomial(Polynomial([0, 0, Fraction(1, 2)])) == "1/2*z^2"
        assert format_polynomial(Polynomial([-2, 0, 3])) == "-2 + 3*z^2"


class TestLaurentSeries:
    def test_window_bookkeeping(self):
        f = LaurentSeries(0, [1, 1])
        assert f.top_power == 0
        assert f.known_through == -1
        assert f.coeff(0) == 1
        assert f.coeff(-1) == 1

    def test_coefficient_above_top_is_zero(self):
        assert LaurentSeries(0, [1, 1]).coeff(3) == 0

    def test_coefficient_below_window_raises(self):
        with pytest.raises(InsufficientTruncation):
            LaurentSeries(0, [1, 1]).coeff(-2)

    def test_leading_zeros_trimmed(self):
        f = LaurentSeries(2, [0, 0, 5, 1])
        assert f.top_power == 0
        assert f.coeffs == (5, 1)

    def test_all_zero_window_keeps_one_coefficient(self):
        f = LaurentSeries(1, [0, 0, 0])
        assert f.is_zero
        assert f.known_through == -1

    def test_truncate_shrinks_window(self):
        f = LaurentSeries(0, [1, 2, 3])
        g = f.truncate(-1)
        assert g.known_through == -1
        assert g.coeffs == (1, 2)
        assert f.truncate(-5) is f

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            LaurentSeries(0, [1.5])


class TestPolyShiftMulSeries:
    def test_direct_expansion(self):
        f = LaurentSeries(0, [1, 1])
        out = poly_shift_mul_series(Polynomial([1, 1]), 0, f)
        assert out.top_power == 1
        assert (out.coeff(1), out.coeff(0), out.coeff(-1)) == (1, 2, 1)
        assert out.known_through == -1

    def test_zero_polynomial_annihilates(self):
        f = LaurentSeries(0, [1, 1])
        out = poly_shift_mul_series(Polynomial([]), 3, f)
        assert out.is_zero
        assert out.known_through == 3 + f.known_through

    def test_constant_negation_with_shift(self):
        f = LaurentSeries(0, [1, 1, Fraction(1, 2)])
        out = poly_shift_mul_series(Polynomial([-1]), 1, f)
        assert (out.coeff(1), out.coeff(0), out.coeff(-1)) == (-1, -1, Fraction(-1, 2))
        assert out.known_through == -1

    @given(polynomials, st.integers(min_value=0, max_value=3), series_values)
    def test_matches_index_arithmetic_oracle(self, q, e, f):
        out = poly_shift_mul_series(q, e, f)
        assert out.known_through == e + f.known_through
        for p in range(out.top_power, out.known_through - 1, -1):
            expected = oracle_shift_mul_coefficient(q.coeffs, e, f.top_power, f.coeffs, p)
            assert out.coeff(p) == expected

    @given(polynomials, st.integers(min_value=0, max_value=3), series_values, series_values)
    def test_distributes_over_series_add(self, q, e, f, g):
        """Both routes agree wherever both are determined by the same data.

        The bookkeeping window is e + known_through regardless of deg Q, so
        the two routes may disagree in the deg Q lowest claimed powers when
        f and g have different windows; above e + deg Q + max(kt) every
        contribution comes from coefficients both routes share.
        """
        left = poly_shift_mul_series(q, e, series_add(f, g))
        right = series_add(poly_shift_mul_series(q, e, f), poly_shift_mul_series(q, e, g))
        assert left.known_through == right.known_through
        if q.is_zero:
            assert left.is_zero and right.is_zero
            return
        common = e + q.degree + max(f.known_through, g.known_through)
        for p in range(max(left.top_power, right.top_power), common - 1, -1):
            assert left.coeff(p) == right.coeff(p)


class TestSeriesAdd:
    def test_cancellation_to_zero(self):
        a = LaurentSeries(1, [1, 1])
        b = LaurentSeries(1, [-1, -1])
        assert series_add(a, b).is_zero

    def test_trust_window_is_intersection(self):
        a = LaurentSeries(0, [1, 1])
        b = LaurentSeries(-2, [1])
        out = series_add(a, b)
        assert out.known_through == -1
        assert (out.coeff(0), out.coeff(-1)) == (1, 1)

    def test_partial_cancellation(self):
        a = LaurentSeries(1, [1, 2, 1])
        b = LaurentSeries(1, [-1, -1, 0])
        out = series_add(a, b)
        assert out.top_power == 0
        assert (out.coeff(0), out.coeff(-1)) == (1, 1)

    @given(series_values, series_values)
    def test_commutative_and_window(self, a, b):
        out = series_add(a, b)
        assert out == series_add(b, a)
        assert out.known_through == max(a.known_through, b.known_through)


class TestResidualOrder:
    def test_first_nonzero_sets_exact_order(self):
        r = LaurentSeries(0, [0, 1, Fraction(-1, 2)])
        assert residual_order(r) == OrderBound.exactly(1)

    def test_all_zero_window_gives_lower_bound(self):
        r = LaurentSeries.zero(known_through=-5)
        order = residual_order(r)
        assert order == OrderBound.at_least(6)
        assert order.is_lower_bound

    def test_nonnegative_powers_give_nonpositive_order(self):
        assert residual_order(LaurentSeries(2, [3, 0, 0])) == OrderBound.exactly(-2)

    def test_meets_threshold(self):
        assert OrderBound.exactly(2).meets(2)
        assert OrderBound.at_least(2).meets(2)
        assert not OrderBound.at_least(1).meets(2)

    @given(series_values, st.integers(min_value=-3, max_value=3))
    def test_monotone_under_truncation(self, r, new_kt):
        before = residual_order(r)
        after = residual_order(r.truncate(new_kt))
        assert after.value <= before.value
        if not before.is_lower_bound and not after.is_lower_bound:
            assert after == before


class TestSeriesReciprocal:
    def test_constant_one(self):
        g = series_reciprocal(LaurentSeries(0, [1]), 0)
        assert g.coeff(0) == 1

    def test_two_terms(self):
        g = series_reciprocal(LaurentSeries(0, [1, 1, 0]), 2)
        assert (g.coeff(0), g.coeff(-1), g.coeff(-2)) == (1, -1, 1)

    def test_leading_zero_rejected(self):
        with pytest.raises(LeadingZero):
            series_reciprocal(LaurentSeries(-1, [1]), 1)

    def test_window_too_short(self):
        with pytest.raises(InsufficientTruncation):
            series_reciprocal(LaurentSeries(0, [1, 1]), 2)

    @given(
        st.lists(rationals, min_size=1, max_size=5).filter(lambda cs: cs[0] != 0),
        st.integers(min_value=0, max_value=4),
    )
    def test_product_is_one_to_requested_order(self, coeffs, terms):
        coeffs = coeffs + [Fraction(0)] * max(0, terms + 1 - len(coeffs))
        f = LaurentSeries(0, coeffs)
        g = series_reciprocal(f, terms)
        for p in range(0, -terms - 1, -1):
            acc = Fraction(0)
            for i in range(0, -p + 1):
                acc += f.coeff(-i) * g.coeff(p + i)
            assert acc == (1 if p == 0 else 0)


class TestSeriesTuple:
    def test_leading_zero_rejected(self):
        with pytest.raises(LeadingZero):
            SeriesTuple([LaurentSeries(0, [1, 1]), LaurentSeries(0, [0, 1])])
        with pytest.raises(LeadingZero):
            SeriesTuple([LaurentSeries(0, [0]), LaurentSeries(0, [1, 1])])

    def test_fingerprint_detects_any_change(self):
        a = SeriesTuple([LaurentSeries(0, [1, 0]), LaurentSeries(0, [1, 1])])
        b = SeriesTuple([LaurentSeries(0, [1, 0]), LaurentSeries(0, [1, 2])])
        c = SeriesTuple([LaurentSeries(0, [1, 0]), LaurentSeries(0, [1, 1])])
        assert a.fingerprint != b.fingerprint
        assert a.fingerprint == c.fingerprint

    def test_window_requirement(self):
        F = SeriesTuple([LaurentSeries(0, [1, 0]), LaurentSeries(0, [1, 1])])
        F.require_known_through(-1)
        with pytest.raises(InsufficientTruncation) as excinfo:
            F.require_known_through(-2)
        assert excinfo.value.series_index == 0

    def test_needs_two_series(self):
        with pytest.raises(ValueError):
            SeriesTuple([LaurentSeries(0, [1])])
