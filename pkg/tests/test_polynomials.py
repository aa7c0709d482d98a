from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aqbernstein.polynomials import (
    FitMismatchError,
    Polynomial,
    poly_add,
    poly_eval,
    poly_fit,
    poly_scale,
    poly_sub,
)
from aqbernstein.scalars import MixedModeError

F = Fraction

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
small_polys = st.lists(rationals, max_size=8).map(lambda cs: Polynomial(tuple(cs)))


class TestConstruction:
    def test_trailing_exact_zeros_trimmed(self):
        assert Polynomial((F(1), F(0), F(0))).coeffs == (F(1),)
        assert Polynomial((0, 0)).coeffs == ()

    def test_float_small_values_kept(self):
        p = Polynomial((0.0, 1e-30, 0.0))
        assert p.degree == 1  # only the structural 0.0 tail goes

    def test_degree(self):
        assert Polynomial(()).degree == -1
        assert Polynomial((F(0), F(1))).degree == 1

    def test_mode_mixing_rejected(self):
        with pytest.raises(MixedModeError):
            Polynomial((F(1), 0.5))

    def test_ints_become_exact(self):
        assert Polynomial((0, -1, 1)).coeffs == (F(0), F(-1), F(1))


class TestEval:
    def test_quadratic_at_half(self):
        assert poly_eval(Polynomial((0, -1, 1)), F(1, 2)) == F(-1, 4)

    def test_zero_polynomial(self):
        assert poly_eval(Polynomial(()), F(7, 3)) == 0
        assert poly_eval(Polynomial(()), 0.25) == 0.0

    def test_identity(self):
        assert poly_eval(Polynomial((0, 1)), F(3, 7)) == F(3, 7)

    def test_mixed_modes_rejected(self):
        with pytest.raises(MixedModeError):
            poly_eval(Polynomial((F(1), F(2))), 0.5)


class TestArithmetic:
    def test_cancellation(self):
        assert poly_add(Polynomial((0, 1)), Polynomial((0, -1))) == Polynomial(())

    def test_scale(self):
        assert poly_scale(Polynomial((0, -1, 1)), 2) == Polynomial((0, -2, 2))

    def test_sub_to_zero(self):
        assert poly_sub(Polynomial((1,)), Polynomial((1,))) == Polynomial(())

    def test_mode_mixing_rejected(self):
        with pytest.raises(MixedModeError):
            poly_add(Polynomial((F(1),)), Polynomial((1.0,)))

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=60)
    def test_add_associative(self, p, q, r):
        assert poly_add(poly_add(p, q), r) == poly_add(p, poly_add(q, r))

    @given(small_polys, small_polys, rationals)
    @settings(max_examples=60)
    def test_scale_distributes(self, p, q, s):
        lhs = poly_scale(poly_add(p, q), s)
        rhs = poly_add(poly_scale(p, s), poly_scale(q, s))
        assert lhs == rhs


class TestFit:
    def test_quadratic_through_three_points(self):
        pts = [(F(0), F(0)), (F(1), F(0)), (F(1, 2), F(-1, 4))]
        assert poly_fit(pts, 2) == Polynomial((0, -1, 1))

    def test_constant_with_consistent_extra(self):
        c = F(5, 3)
        assert poly_fit([(F(0), c), (F(1), c)], 0) == Polynomial((c,))

    def test_extra_point_mismatch(self):
        with pytest.raises(FitMismatchError):
            poly_fit([(F(0), F(0)), (F(1), F(1)), (F(2), F(4))], 1)

    def test_duplicate_nodes(self):
        with pytest.raises(ValueError, match="duplicate"):
            poly_fit([(F(0), F(0)), (F(0), F(1)), (F(1), F(1))], 2)

    def test_not_enough_points(self):
        with pytest.raises(ValueError, match="at least"):
            poly_fit([(F(0), F(0))], 2)

    def test_interpolates_supplied_points_exactly(self):
        pts = [(F(i), F((-1) ** i, i + 1)) for i in range(6)]
        p = poly_fit(pts, 5)
        for x, y in pts:
            assert poly_eval(p, x) == y

    @given(st.lists(rationals, min_size=1, max_size=11))
    @settings(max_examples=60)
    def test_left_inverse_of_sampling(self, coeffs):
        p = Polynomial(tuple(coeffs))
        bound = max(p.degree, 0)
        xs = [F(t, 13) for t in range(bound + 3)]
        pts = [(x, poly_eval(p, x)) for x in xs]
        assert poly_fit(pts, bound) == p

    def test_float_mode_fit(self):
        pts = [(0.0, 0.0), (1.0, 0.0), (0.5, -0.25)]
        p = poly_fit(pts, 2)
        assert p.mode == "float"
        assert abs(poly_eval(p, 0.25) - (0.25**2 - 0.25)) < 1e-15
