"""Complex-index Jacobi polynomials and the Routh family on the imaginary axis.

Everything here is built from one canonical object: the Jacobi polynomial with
complex indices, normalized so that index (1, 1) reproduces the Legendre
polynomials (i.e. ``jacobi_complex_eval(m, beta, alpha, y)`` equals the
textbook Jacobi polynomial of indices ``(beta - 1, alpha - 1)``).  The Routh
polynomial of order ``m`` and complex index ``alpha`` is then

    R_m^(alpha)(eta) = (-i)^m * P_m^(alpha*, alpha)(i * eta)

whose coefficients are real for *every* complex ``alpha``.  Construction is
carried out in exact Gaussian-rational arithmetic, so realness, degree
degeneracy and ODE residuals are decided by identity; floats appear only in
evaluation and quadrature.

Two empirically pinned facts about the family are exposed and tested here:

* the Rodrigues-type generator with weight index ``alpha`` produces
  ``2^m m! * R_m^(alpha* + 1)``, and
* the orthogonality weight for the family at index ``alpha`` is the generating
  weight at index ``alpha* - 1`` (one unit *lower* than the family index).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from . import _exact as ex
from ._exact import CNum
from .errors import (
    DegenerateParameter,
    ImaginaryResidue,
    NonIntegrable,
    ZeroPolynomial,
)


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexIndex:
    """A complex polynomial index stored as exact rationals."""

    re: Fraction
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, value) -> "ComplexIndex":
        if isinstance(value, ComplexIndex):
            return value
        if isinstance(value, complex):
            return cls(ex.to_fraction(value.real), ex.to_fraction(value.imag))
        return cls(ex.to_fraction(value), Fraction(0))

    def conjugate(self) -> "ComplexIndex":
        return ComplexIndex(self.re, -self.im)

    def shifted(self, k) -> "ComplexIndex":
        return ComplexIndex(self.re + Fraction(k), self.im)

    @property
    def as_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    @property
    def as_cnum(self) -> CNum:
        return (self.re, self.im)

    def __repr__(self):
        return "ComplexIndex(%s, %s)" % (self.re, self.im)


@dataclass(frozen=True)
class RealPolynomial:
    """Dense real polynomial with exact Fraction coefficients, ascending degree.

    The trailing (highest-degree) coefficient is nonzero unless the polynomial
    is identically zero, in which case ``coeffs`` is empty.
    """

    coeffs: tuple

    @classmethod
    def from_coeffs(cls, coeffs) -> "RealPolynomial":
        cs = [ex.to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_floats(self) -> np.ndarray:
        if self.is_zero:
            return np.zeros(1)
        return np.array([float(c) for c in self.coeffs])

    def __call__(self, x):
        if self.is_zero:
            return np.zeros_like(np.asarray(x, dtype=float)) if np.ndim(x) else 0.0
        return np.polynomial.polynomial.polyval(x, self.as_floats())

    def eval_exact(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RealPolynomial":
        return RealPolynomial.from_coeffs(ex.rp_diff(list(self.coeffs)))

    def __mul__(self, other):
        if isinstance(other, RealPolynomial):
            return RealPolynomial.from_coeffs(ex.rp_mul(list(self.coeffs), list(other.coeffs)))
        return RealPolynomial.from_coeffs(ex.rp_scale(list(self.coeffs), other))

    __rmul__ = __mul__

    def __add__(self, other: "RealPolynomial") -> "RealPolynomial":
        return RealPolynomial.from_coeffs(ex.rp_add(list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other: "RealPolynomial") -> "RealPolynomial":
        return self + (-1) * other


@dataclass(frozen=True)
class RouthPolynomial:
    """A Routh polynomial: real polynomial plus its complex index and order."""

    order: int
    index: ComplexIndex
    poly: RealPolynomial
    convention: str  # "canonical-sum" | "rodrigues"

    @property
    def degenerate(self) -> bool:
        """True when the leading coefficient vanished and degree < order."""
        return self.poly.degree < self.order

    def __call__(self, eta):
        return self.poly(eta)

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "alpha": [float(self.index.re), float(self.index.im)],
            "coeffs": [float(c) for c in self.poly.coeffs],
        }


@dataclass(frozen=True)
class WeightParams:
    """Parameters of the generating weight (1+eta^2)^Re(a) exp(2 Im(a) atan eta)."""

    index: ComplexIndex

    @classmethod
    def of(cls, value) -> "WeightParams":
        if isinstance(value, WeightParams):
            return value
        return cls(ComplexIndex.of(value))


@dataclass(frozen=True)
class DiscriminantOrder2:
    """Discriminant of the order-2 Routh polynomial.

    ``value`` is computed from the actual polynomial coefficients.
    ``tabulated`` is the closed form quoted alongside the order-2 coefficient
    table in earlier treatments of this family; it is retained for comparison
    because its dependence on the imaginary index part disagrees with the
    direct computation (the sign of ``value`` depends on Re(alpha) only).
    """

    value: float
    tabulated: float


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _jacobi_coeffs_cached(m: int, beta: ComplexIndex, alpha: ComplexIndex) -> tuple:
    """Coefficients (ascending, CNum) of the complex-index Jacobi polynomial.

    Index normalization: (beta, alpha) here corresponds to textbook indices
    (beta-1, alpha-1), so (1, 1) gives Legendre.  The expansion is the finite
    double sum

        2^-m * sum_k (beta+k)_{m-k} (alpha+m-k)_k / (k! (m-k)!)
                     * (y-1)^k (y+1)^{m-k}

    with rising-factorial Pochhammers, evaluated exactly.
    """
    b = beta.as_cnum
    a = alpha.as_cnum
    total: list[CNum] = []
    for k in range(m + 1):
        coef = ex.c_mul(
            ex.rising((b[0] + k, b[1]), m - k),
            ex.rising((a[0] + m - k, a[1]), k),
        )
        coef = ex.c_scale(coef, Fraction(1, factorial(k) * factorial(m - k)))
        term = ex.p_mul(ex.p_linear_power(-1, 1, k), ex.p_linear_power(1, 1, m - k))
        total = ex.p_add(total, ex.p_scale(term, coef))
    return tuple(ex.p_scale(total, (Fraction(1, 2 ** m), Fraction(0))))


def jacobi_complex_coeffs(m: int, beta, alpha) -> list[CNum]:
    if m < 0:
        raise ValueError("order must be nonnegative")
    return list(_jacobi_coeffs_cached(m, ComplexIndex.of(beta), ComplexIndex.of(alpha)))


def jacobi_complex_eval(m: int, beta, alpha, y) -> complex:
    """Evaluate the complex-index Jacobi polynomial at a complex point."""
    coeffs = jacobi_complex_coeffs(m, beta, alpha)
    acc = 0j
    z = complex(y)
    for re, im in reversed(coeffs):
        acc = acc * z + complex(float(re), float(im))
    return acc


_I_POWERS = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)),
             (Fraction(-1), Fraction(0)), (Fraction(0), Fraction(-1)))


@lru_cache(maxsize=4096)
def _routh_cached(m: int, alpha: ComplexIndex) -> RouthPolynomial:
    coeffs = _jacobi_coeffs_cached(m, alpha.conjugate(), alpha)
    real_coeffs = []
    for j, c in enumerate(coeffs):
        w = _I_POWERS[(j - m) % 4]  # (-i)^m * i^j
        cj = ex.c_mul(w, c)
        if cj[1] != 0:
            raise ImaginaryResidue(
                "coefficient of eta^%d has imaginary part %s" % (j, cj[1])
            )
        real_coeffs.append(cj[0])
    return RouthPolynomial(
        order=m,
        index=alpha,
        poly=RealPolynomial.from_coeffs(real_coeffs),
        convention="canonical-sum",
    )


def routh_polynomial(m: int, alpha) -> RouthPolynomial:
    """Canonical Routh polynomial (-i)^m P_m^(alpha*, alpha)(i eta), exact."""
    if m < 0:
        raise ValueError("order must be nonnegative")
    return _routh_cached(m, ComplexIndex.of(alpha))


def routh_rodrigues(m: int, alpha) -> RouthPolynomial:
    """Routh polynomial generated by the m-fold Rodrigues-type derivative.

    Computes w^-1 d^m/deta^m [(1+eta^2)^m w] with w the generating weight at
    index ``alpha``, by exact symbolic differentiation.  The result is
    2^m m! times the canonical polynomial at index ``alpha* + 1`` (the unit
    index offset between the two generators is pinned by the test suite).
    """
    if m < 0:
        raise ValueError("order must be nonnegative")
    a = ComplexIndex.of(alpha)
    two_ar = 2 * a.re
    two_ai = 2 * a.im
    # Invariant: current expression is P(eta) * (1+eta^2)^k * w(eta).
    p = [Fraction(1)]
    for k in range(m, 0, -1):
        dp = ex.rp_diff(p)
        term = ex.rp_mul(dp, [Fraction(1), Fraction(0), Fraction(1)])
        lin = [two_ai, two_ar + 2 * k]
        p = ex.rp_add(term, ex.rp_mul(lin, p))
    return RouthPolynomial(
        order=m,
        index=a,
        poly=RealPolynomial.from_coeffs(p),
        convention="rodrigues",
    )


def routh_hypergeometric_eval(m: int, alpha, eta: float) -> float:
    """Evaluate the canonical Routh polynomial via its truncated 2F1 form.

    Uses R_m^(alpha)(eta) = i^m (alpha)_m / m! * F(-m, m+2aR-1; alpha; z) with
    z = (1+i eta)/2 (the lower 2F1 parameter sits one unit below the printed
    unshifted form, matching the canonical index normalization).
    """
    if m < 0:
        raise ValueError("order must be nonnegative")
    a = ComplexIndex.of(alpha)
    if a.im == 0 and a.re.denominator == 1 and -(m - 1) <= a.re <= 0:
        raise DegenerateParameter(
            "Pochhammer (alpha)_j vanishes for alpha=%s, m=%d" % (a.re, m)
        )
    ac = a.as_complex
    two_ar = 2.0 * float(a.re)
    z = (1.0 + 1j * eta) / 2.0
    term = 1.0 + 0j
    acc = 1.0 + 0j
    for j in range(m):
        term *= (-m + j) * (m + two_ar - 1 + j) / ((ac + j) * (j + 1)) * z
        acc += term
    poch = 1.0 + 0j
    for j in range(m):
        poch *= ac + j
    val = (1j ** m) * poch / factorial(m) * acc
    return val.real


def weight_eval(w, eta):
    """Generating weight (1+eta^2)^Re(a) * exp(2 Im(a) atan eta); positive."""
    a = WeightParams.of(w).index
    eta = np.asarray(eta, dtype=float)
    out = (1.0 + eta ** 2) ** float(a.re) * np.exp(2.0 * float(a.im) * np.arctan(eta))
    return float(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# verification helpers
# ---------------------------------------------------------------------------

def ode_residual(p: RouthPolynomial) -> RealPolynomial:
    """Residual of the real-line hypergeometric-type equation for ``p``.

    The equation, obtained from the complex-index Jacobi equation under the
    imaginary-axis substitution, reads for the canonical convention

        (1+eta^2) R'' + 2(aR*eta - aI) R' - m(m + 2aR - 1) R = 0

    and for the Rodrigues convention (index offset alpha -> alpha* + 1)

        (1+eta^2) R'' + 2((aR+1)*eta + aI) R' - m(m + 2aR + 1) R = 0.

    Returns the residual polynomial, exactly; it must be identically zero.
    """
    a = p.index
    r = list(p.poly.coeffs)
    d1 = ex.rp_diff(r)
    d2 = ex.rp_diff(d1)
    m = p.order
    if p.convention == "canonical-sum":
        lin = [-2 * a.im, 2 * a.re]
        eig = Fraction(m) * (m + 2 * a.re - 1)
    elif p.convention == "rodrigues":
        lin = [2 * a.im, 2 * a.re + 2]
        eig = Fraction(m) * (m + 2 * a.re + 1)
    else:
        raise ValueError("unknown convention %r" % p.convention)
    res = ex.rp_mul(d2, [Fraction(1), Fraction(0), Fraction(1)])
    res = ex.rp_add(res, ex.rp_mul(lin, d1))
    res = ex.rp_add(res, ex.rp_scale(r, -eig))
    return RealPolynomial.from_coeffs(res)


def pinned_weight_index(family_index) -> ComplexIndex:
    """Orthogonality weight index for the canonical family at ``family_index``.

    Pinned empirically (and by the Pearson equation of the canonical ODE):
    the family at index alpha is orthogonal under the generating weight at
    index alpha* - 1.
    """
    return ComplexIndex.of(family_index).conjugate().shifted(-1)


def family_index_for_weight(w) -> ComplexIndex:
    """Inverse of :func:`pinned_weight_index`."""
    return WeightParams.of(w).index.conjugate().shifted(1)


def inner_product(n: int, m: int, w) -> float:
    """Weighted inner product of two canonical Routh polynomials.

    Integrates R_n R_m w over the real line for the family pinned to the
    weight ``w`` (family index = conj(weight index) + 1), by adaptive
    quadrature with absolute tolerance 1e-10.
    """
    w = WeightParams.of(w)
    if 2 * max(n, m) + 2 * w.index.re >= -1:
        raise NonIntegrable(
            "orders (%d, %d) do not decay under weight index %s" % (n, m, w.index)
        )
    fam = family_index_for_weight(w)
    rn = routh_polynomial(n, fam)
    rm = routh_polynomial(m, fam)
    cn = rn.poly.as_floats()
    cm = rm.poly.as_floats()
    are = float(w.index.re)
    aim = float(w.index.im)

    def integrand(eta):
        pv = np.polynomial.polynomial.polyval
        return (
            pv(eta, cn) * pv(eta, cm)
            * (1.0 + eta ** 2) ** are * np.exp(2.0 * aim * np.arctan(eta))
        )

    from .oracle import adaptive_quadrature

    return adaptive_quadrature(integrand, -np.inf, np.inf, tol=1e-10)


def real_roots(p) -> list[float]:
    """All real roots of ``p`` with multiplicity, ascending.

    Root *count* is exact (rational root isolation on the exact
    coefficients); locations are refined well below 1e-12.
    """
    import sympy

    if isinstance(p, RouthPolynomial):
        p = p.poly
    if not isinstance(p, RealPolynomial):
        p = RealPolynomial.from_coeffs(p)
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return []
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c) for c in reversed(p.coeffs)], x)
    return [float(r.evalf(25)) for r in poly.real_roots(multiple=True)]


def discriminant_order2(alpha) -> DiscriminantOrder2:
    """Discriminant of the order-2 canonical Routh polynomial.

    ``value`` comes from the actual coefficients; in closed form it equals
    -(1/4)(2aR+1)[(aR+1)^2 + aI^2], so its sign is that of -(2aR+1) and does
    not depend on aI.  ``tabulated`` evaluates the quoted closed form whose
    aI-dependence survives; the two are reported side by side rather than
    reconciled.
    """
    a = ComplexIndex.of(alpha)
    p = routh_polynomial(2, a).poly
    cs = list(p.coeffs) + [Fraction(0)] * (3 - len(p.coeffs))
    c0, c1, c2 = cs[0], cs[1], cs[2]
    value = float(c1 * c1 - 4 * c2 * c0)
    ar = float(a.re)
    ai = float(a.im)
    tabulated = -0.25 * (ar + 3.0) * ((ar + 2.0) ** 2 - 0.5 * (3.0 * ar + 4.0) * ai ** 2)
    return DiscriminantOrder2(value=value, tabulated=tabulated)


def squared_norm(n: int, w) -> float:
    """Self inner product of the n-th family member under weight ``w``."""
    return inner_product(n, n, w)
