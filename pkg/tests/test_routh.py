"""Polynomial-family tests: construction identities, ODEs, orthogonality, roots."""

import math
from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose

from rrspectra.errors import DegenerateParameter, NonIntegrable, ZeroPolynomial
from rrspectra.routh import (
    ComplexIndex,
    RealPolynomial,
    WeightParams,
    discriminant_order2,
    inner_product,
    jacobi_complex_eval,
    ode_residual,
    pinned_weight_index,
    real_roots,
    routh_hypergeometric_eval,
    routh_polynomial,
    routh_rodrigues,
    weight_eval,
)


def random_indices(rng, count):
    """Random rational complex indices with modest denominators."""
    out = []
    for _ in range(count):
        re = Fraction(int(rng.integers(-40, 41)), int(rng.integers(1, 9)))
        im = Fraction(int(rng.integers(-40, 41)), int(rng.integers(1, 9)))
        out.append(ComplexIndex(re, im))
    return out


# ---------------------------------------------------------------------------
# complex-index Jacobi polynomials
# ---------------------------------------------------------------------------

class TestJacobiComplex:
    def test_order_zero_is_one(self, rng):
        for _ in range(5):
            b = complex(rng.normal(), rng.normal())
            a = complex(rng.normal(), rng.normal())
            y = complex(rng.normal(), rng.normal())
            assert jacobi_complex_eval(0, b, a, y) == 1.0 + 0j

    def test_order_one_hand_expansion(self, rng):
        for _ in range(10):
            b = complex(rng.normal(), rng.normal())
            a = complex(rng.normal(), rng.normal())
            y = complex(rng.normal(), rng.normal())
            expected = ((a + b) * y + b - a) / 2.0
            assert_allclose(jacobi_complex_eval(1, b, a, y), expected, rtol=1e-13)

    def test_index_one_one_is_legendre(self):
        for y in (-0.7, 0.0, 0.5, 1.0):
            assert_allclose(
                jacobi_complex_eval(2, 1, 1, y).real, (3 * y * y - 1) / 2, atol=1e-14
            )

    def test_exact_rational_coefficients(self):
        from rrspectra.routh import jacobi_complex_coeffs

        coeffs = jacobi_complex_coeffs(2, 1, 1)
        assert coeffs == [
            (Fraction(-1, 2), Fraction(0)),
            (Fraction(0), Fraction(0)),
            (Fraction(3, 2), Fraction(0)),
        ]


# ---------------------------------------------------------------------------
# canonical construction and realness
# ---------------------------------------------------------------------------

class TestRouthCanonical:
    def test_order_zero(self):
        p = routh_polynomial(0, complex(1.3, -0.4))
        assert p.poly.coeffs == (Fraction(1),)

    def test_order_one_closed_form(self, rng):
        for a in random_indices(rng, 8):
            p = routh_polynomial(1, a)
            assert p.poly.coeffs == RealPolynomial.from_coeffs([-a.im, a.re]).coeffs

    def test_order_two_at_minus_three(self):
        p = routh_polynomial(2, -3)
        assert p.poly.coeffs == (Fraction(-1, 2), Fraction(0), Fraction(5, 2))
        assert_allclose(real_roots(p), [-1 / math.sqrt(5), 1 / math.sqrt(5)], rtol=1e-12)

    def test_realness_is_exact_for_random_indices(self, rng):
        # exactness invariant: construction raises ImaginaryResidue otherwise
        for a in random_indices(rng, 50):
            for m in range(9):
                p = routh_polynomial(m, a)
                assert all(isinstance(c, Fraction) for c in p.poly.coeffs)

    def test_degree_equals_order_generically(self, rng):
        for a in random_indices(rng, 20):
            # exclude the leading-coefficient zero set (m + 2aR - 1)_m = 0
            for m in range(1, 7):
                lead_zero = any(
                    Fraction(m + j) + 2 * a.re - 1 == 0 for j in range(m)
                )
                p = routh_polynomial(m, a)
                if lead_zero:
                    assert p.degenerate
                else:
                    assert p.poly.degree == m and not p.degenerate

    def test_degeneracy_reported_not_silent(self):
        # m=2 leading coefficient (2aR+1)(aR+1)/4 vanishes at aR = -1/2
        p = routh_polynomial(2, ComplexIndex(Fraction(-1, 2), Fraction(1)))
        assert p.degenerate and p.poly.degree < 2

    def test_json_round_shape(self):
        d = routh_polynomial(2, complex(-3, 0)).to_json_dict()
        assert d == {"order": 2, "alpha": [-3.0, 0.0], "coeffs": [-0.5, 0.0, 2.5]}


# ---------------------------------------------------------------------------
# Rodrigues generator
# ---------------------------------------------------------------------------

class TestRodrigues:
    def test_order_zero(self):
        assert routh_rodrigues(0, complex(0.3, 1.0)).poly.coeffs == (Fraction(1),)

    def test_order_one_closed_form(self, rng):
        for a in random_indices(rng, 8):
            p = routh_rodrigues(1, a)
            assert p.poly.coeffs == (2 * a.im, 2 * (a.re + 1))

    def test_proportional_to_canonical_at_shifted_conjugate(self, rng):
        # Rodrigues(m, a) == 2^m m! * canonical(m, conj(a) + 1), exactly
        for a in random_indices(rng, 10):
            for m in range(4):
                rod = routh_rodrigues(m, a)
                can = routh_polynomial(m, a.conjugate().shifted(1))
                scale = Fraction(2 ** m * math.factorial(m))
                assert rod.poly.coeffs == tuple(scale * c for c in can.poly.coeffs)


# ---------------------------------------------------------------------------
# hypergeometric form
# ---------------------------------------------------------------------------

class TestHypergeometric:
    def test_order_zero_constant(self):
        for eta in (-3.0, 0.0, 7.5):
            assert routh_hypergeometric_eval(0, complex(0.2, 0.8), eta) == 1.0

    def test_matches_linear_case(self):
        assert_allclose(routh_hypergeometric_eval(1, -3, 2.0), -6.0, rtol=1e-13)

    def test_root_of_order_two(self):
        assert abs(routh_hypergeometric_eval(2, -3, 1 / math.sqrt(5))) < 1e-12

    def test_matches_canonical_for_random_inputs(self, rng):
        for a in random_indices(rng, 12):
            if a.im == 0 and a.re.denominator == 1 and -7 <= a.re <= 0:
                continue
            for m in range(7):
                eta = float(rng.normal()) * 2.0
                poly = routh_polynomial(m, a)
                direct = poly(eta)
                via_f = routh_hypergeometric_eval(m, a, eta)
                # tolerance scaled by the summation magnitude: the truncated
                # series cancels strongly when |alpha| is large
                scale = max(1.0, float(np.max(np.abs(poly.poly.as_floats()))))
                scale *= max(1.0, abs(eta)) ** m
                assert_allclose(via_f, direct, rtol=1e-11, atol=1e-12 * scale)

    def test_degenerate_parameter_rejected(self):
        with pytest.raises(DegenerateParameter):
            routh_hypergeometric_eval(3, -1, 0.5)


# ---------------------------------------------------------------------------
# weight
# ---------------------------------------------------------------------------

class TestWeight:
    def test_real_index_at_origin(self):
        assert weight_eval(WeightParams.of(-2.7), 0.0) == 1.0

    def test_pure_imaginary_index(self):
        assert_allclose(weight_eval(WeightParams.of(1j), 1.0), math.exp(math.pi / 2), rtol=1e-14)

    def test_inverse_square(self):
        assert_allclose(weight_eval(WeightParams.of(-2), 1.0), 0.25, rtol=1e-14)

    def test_positive_everywhere(self, rng):
        w = WeightParams.of(complex(-3.3, 2.1))
        assert np.all(weight_eval(w, rng.normal(size=50) * 10) > 0)


# ---------------------------------------------------------------------------
# differential equation
# ---------------------------------------------------------------------------

class TestOdeResidual:
    def test_constant_solves(self):
        assert ode_residual(routh_polynomial(0, complex(2, 3))).is_zero

    def test_linear_real_index(self):
        assert ode_residual(routh_polynomial(1, -3)).is_zero

    def test_order_two_random_indices(self, rng):
        for a in random_indices(rng, 10):
            assert ode_residual(routh_polynomial(2, a)).is_zero

    def test_all_orders_both_conventions(self, rng):
        for a in random_indices(rng, 6):
            for m in range(9):
                assert ode_residual(routh_polynomial(m, a)).is_zero
                assert ode_residual(routh_rodrigues(m, a)).is_zero


# ---------------------------------------------------------------------------
# inner products and the pinned weight
# ---------------------------------------------------------------------------

class TestInnerProduct:
    def test_plain_beta_integral(self):
        assert_allclose(inner_product(0, 0, WeightParams.of(-2)), math.pi / 2, atol=1e-10)

    def test_orthogonality_zero_two(self):
        # family index -4 pairs with weight index -5
        w = WeightParams.of(pinned_weight_index(-4))
        assert abs(inner_product(0, 2, w)) < 1e-9

    def test_odd_pair_symmetric_weight(self):
        assert abs(inner_product(0, 1, WeightParams.of(-3))) < 1e-10

    def test_precondition(self):
        with pytest.raises(NonIntegrable):
            inner_product(3, 3, WeightParams.of(-2))

    def test_orthogonality_battery(self):
        # orders <= 4 under the pinned weight, real and complex family indices
        for fam in (ComplexIndex.of(-4), ComplexIndex.of(complex(-4, 1.5))):
            w = WeightParams.of(pinned_weight_index(fam))
            norms = [math.sqrt(inner_product(n, n, w)) for n in range(5)]
            assert all(v > 0 for v in norms)
            for n in range(5):
                for m in range(n + 1, 5):
                    val = inner_product(n, m, w)
                    assert abs(val) < 1e-9 * norms[n] * norms[m]


# ---------------------------------------------------------------------------
# roots and discriminants
# ---------------------------------------------------------------------------

class TestRealRoots:
    def test_quadratic_through_zero(self):
        assert_allclose(real_roots(RealPolynomial.from_coeffs([-1, 0, 1])), [-1.0, 1.0], rtol=1e-14)

    def test_routh_order_two(self):
        r = real_roots(routh_polynomial(2, -3).poly)
        assert_allclose(r, [-1 / math.sqrt(5), 1 / math.sqrt(5)], rtol=1e-12)

    def test_no_real_roots(self):
        assert real_roots(RealPolynomial.from_coeffs([1, 0, 1])) == []

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ZeroPolynomial):
            real_roots(RealPolynomial.from_coeffs([0]))

    def test_multiplicity(self):
        # (x-1)^2 * (x+2)
        r = real_roots(RealPolynomial.from_coeffs([2, -3, 0, 1]))
        assert_allclose(r, [-2.0, 1.0, 1.0], rtol=1e-10)


class TestDiscriminant:
    def test_real_index(self):
        d = discriminant_order2(-3)
        assert_allclose(d.value, 5.0, rtol=1e-14)

    def test_complex_index(self):
        d = discriminant_order2(complex(1, 1))
        assert_allclose(d.value, -15 / 4, rtol=1e-14)

    def test_sign_depends_only_on_real_part(self, rng):
        for a in random_indices(rng, 20):
            if 2 * a.re + 1 == 0:
                continue
            d = discriminant_order2(a)
            assert math.copysign(1, d.value) == math.copysign(1, -float(2 * a.re + 1))

    def test_tabulated_form_disagrees_on_asymmetry(self):
        # the quoted closed form keeps an aI dependence the canonical value lacks
        sym = discriminant_order2(complex(-4, 0))
        asym = discriminant_order2(complex(-4, 2))
        # closed form: delta = -(1/4)(2aR+1)[(aR+1)^2 + aI^2]
        assert_allclose(sym.value, asym.value + 0.25 * (2 * -4 + 1) * 4, rtol=1e-12)
        assert sym.tabulated != pytest.approx(asym.tabulated)
