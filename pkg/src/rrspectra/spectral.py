"""Quantization of the symmetric-tangent-polynomial potential family.

The discrete spectrum is governed by the real part of the branch
lambda(e) = sqrt(h0 + 1 - c*e) (branch Re > 0, c = a*(1-kappa)): level n sits
where lambda_R(e_n) = n + 1/2 + sqrt(-a*e_n).  Eliminating the imaginary part
through 2*lambda_R*lambda_I = Im(h0) turns the condition into a quartic in
lambda_R,

    kappa*L^4 + (1-kappa)(2m+1)*L^3 - [h0_R + 1 + (1-kappa)(m+1/2)^2]*L^2
        - Im(h0)^2/4 = 0,

whose positive admissible roots give the bound states and whose negative
roots give the companion (type-d) closed-form solutions lying below the
ground level.  At kappa = 1 the quartic collapses to a quadratic in L^2 and
the root becomes order-independent (the shape-invariant Gendenshtein limit).

Solutions are assembled as gauge * polynomial closed forms

    Phi(eta) = (1+eta^2)^((1-L_R)/2) * exp(s*L_I*atan eta) * R_m^(idx)(eta)

where the sign ``s`` and the index map ``idx`` (conjugation and unit shift of
-lambda) are pinned once, empirically, by driving the canonical-equation
residual below 1e-9; the frozen record is exposed via
:func:`pinned_convention`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import geometry, oracle
from ._exact import to_fraction
from .errors import (
    BranchUndefined,
    ConventionUnresolved,
    DegenerateParameter,
    NoSuchRoot,
    PreconditionViolated,
)
from .geometry import PotentialSpec, TangentPolySpec, VariableMap
from .routh import ComplexIndex, RealPolynomial, RouthPolynomial, real_roots, routh_polynomial

RESIDUAL_GATE = 1e-9
THRESHOLD_ENERGY = 1e-10


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LambdaBranch:
    value: complex
    energy: float


@dataclass(frozen=True)
class QuarticRoots:
    """Classified real roots of the order-m quartic."""

    order: int
    roots: tuple
    c_candidates: tuple  # roots > m + 1/2, bound-state admissible
    d_roots: tuple       # negative roots, type-d branch


class EtaSolution:
    """Closed form (1+eta^2)^p * exp(q*atan eta) * R(eta) with exact derivatives.

    Derivatives are evaluated through the gauge log-derivative
    u = (2p*eta + q)/(1+eta^2), never by finite differences.
    """

    def __init__(self, power: float, atan_coeff: float, poly: RealPolynomial, scale: float = 1.0):
        self.power = float(power)
        self.atan_coeff = float(atan_coeff)
        self.poly = poly
        self.scale = float(scale)
        self._c0 = poly.as_floats()
        self._c1 = poly.derivative().as_floats()
        self._c2 = poly.derivative().derivative().as_floats()

    def gauge(self, eta):
        eta = np.asarray(eta, dtype=float)
        return (1.0 + eta ** 2) ** self.power * np.exp(self.atan_coeff * np.arctan(eta))

    def _u(self, eta):
        return (2.0 * self.power * eta + self.atan_coeff) / (1.0 + eta ** 2)

    def _du(self, eta):
        p, q = self.power, self.atan_coeff
        return (2.0 * p - 2.0 * p * eta ** 2 - 2.0 * q * eta) / (1.0 + eta ** 2) ** 2

    def __call__(self, eta):
        eta = np.asarray(eta, dtype=float)
        pv = np.polynomial.polynomial.polyval
        out = self.scale * self.gauge(eta) * pv(eta, self._c0)
        return float(out) if out.ndim == 0 else out

    def d1(self, eta):
        eta = np.asarray(eta, dtype=float)
        pv = np.polynomial.polynomial.polyval
        g = self.gauge(eta)
        out = self.scale * g * (self._u(eta) * pv(eta, self._c0) + pv(eta, self._c1))
        return float(out) if out.ndim == 0 else out

    def d2(self, eta):
        eta = np.asarray(eta, dtype=float)
        pv = np.polynomial.polynomial.polyval
        g = self.gauge(eta)
        u = self._u(eta)
        out = self.scale * g * (
            (u * u + self._du(eta)) * pv(eta, self._c0)
            + 2.0 * u * pv(eta, self._c1)
            + pv(eta, self._c2)
        )
        return float(out) if out.ndim == 0 else out

    def log_deriv1(self, eta):
        """Phi'/Phi, safe only where the polynomial factor has no zeros."""
        pv = np.polynomial.polynomial.polyval
        return self._u(eta) + pv(eta, self._c1) / pv(eta, self._c0)

    def log_parts(self, eta):
        """(Phi'/Phi, Phi''/Phi) as a pair, for Darboux chain rules."""
        pv = np.polynomial.polynomial.polyval
        u = self._u(eta)
        r0 = pv(eta, self._c0)
        r1 = pv(eta, self._c1) / r0
        r2 = pv(eta, self._c2) / r0
        return u + r1, (u * u + self._du(eta)) + 2.0 * u * r1 + r2

    def with_extra_factor(self, factor: RealPolynomial) -> "EtaSolution":
        return EtaSolution(self.power, self.atan_coeff, self.poly * factor, self.scale)


@dataclass(frozen=True)
class BoundState:
    n: int
    energy: float
    lam: complex
    poly: RouthPolynomial
    phi: EtaSolution
    psi: np.ndarray | None = None
    x_grid: np.ndarray | None = None

    @property
    def nodes(self) -> int:
        return len(real_roots(self.poly.poly))


@dataclass(frozen=True)
class AehSolution:
    kind: str  # "c" | "d"
    m: int
    energy: float
    lam: complex
    poly: RouthPolynomial
    nodeless: bool
    phi: EtaSolution
    psi: np.ndarray | None = None
    x_grid: np.ndarray | None = None


@dataclass(frozen=True)
class Spectrum:
    states: tuple
    n_max_constructive: int
    n_max_formula: int
    notes: tuple = ()

    @property
    def formula_consistent(self) -> bool:
        """The closed-form level count (max index + 1) versus the constructive one."""
        return self.n_max_formula + 1 == self.n_max_constructive

    @property
    def energies(self) -> list:
        return [s.energy for s in self.states]

    def to_json_dict(self) -> dict:
        return {
            "states": [
                {
                    "n": s.n,
                    "energy": s.energy,
                    "lambda": [s.lam.real, s.lam.imag],
                    "nodes": s.nodes,
                }
                for s in self.states
            ],
            "n_max_constructive": self.n_max_constructive,
            "n_max_formula": self.n_max_formula,
            "formula_consistent": self.formula_consistent,
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------------------
# branch and quartic
# ---------------------------------------------------------------------------

def lambda_of_energy(spec: PotentialSpec, epsilon: float) -> LambdaBranch:
    """lambda(e) = sqrt(h0 + 1 - c*e) on the branch Re(lambda) > 0."""
    arg = spec.h0 + 1.0 - spec.energy_coupling * epsilon
    if arg == 0:
        raise BranchUndefined("h0 + 1 - c*e vanishes; branch point")
    lam = cmath.sqrt(arg)
    if lam.real < 0:
        lam = -lam
    return LambdaBranch(value=lam, energy=epsilon)


def _quartic_coeffs(spec: PotentialSpec, m: int) -> list:
    """Exact ascending coefficients of the order-m quartic in lambda_R."""
    kap = to_fraction(spec.tp.kappa_plus)
    b = 1 - kap
    a_coef = to_fraction(spec.h0.real) + 1
    c_const = to_fraction(spec.h0.imag) ** 2 / 4
    half = Fraction(2 * m + 1, 2)
    return [
        -c_const,
        Fraction(0),
        -(a_coef + b * half ** 2),
        b * (2 * m + 1),
        kap,
    ]


def quartic_residual_scale(spec: PotentialSpec, m: int, lam_r: float) -> float:
    coeffs = [float(c) for c in _quartic_coeffs(spec, m)]
    val = np.polynomial.polynomial.polyval(lam_r, np.array(coeffs))
    return abs(val) / max(1.0, abs(lam_r) ** 4)


def quartic_lambda_roots(spec: PotentialSpec, m: int) -> QuarticRoots:
    """All real roots of the order-m quartic, exactly isolated and classified.

    Roots at lambda = 0 (present only when Im(h0) = 0) sit on the square-root
    branch point and are discarded.  Positive roots above m + 1/2 are
    bound-state candidates; negative roots belong to type-d solutions.
    """
    if not spec.tp.is_symmetric:
        raise PreconditionViolated("quartic quantization requires a symmetric tangent polynomial")
    roots = [r for r in real_roots(RealPolynomial.from_coeffs(_quartic_coeffs(spec, m)))
             if abs(r) > 1e-12]
    half = m + 0.5
    return QuarticRoots(
        order=m,
        roots=tuple(roots),
        c_candidates=tuple(r for r in roots if r > half),
        d_roots=tuple(r for r in roots if r < 0),
    )


def _lambda_from_root(spec: PotentialSpec, lam_r: float) -> complex:
    lam_i = spec.h0.imag / (2.0 * lam_r) if spec.h0.imag != 0.0 else 0.0
    return complex(lam_r, lam_i)


def closed_form_lambda_kappa1(spec: PotentialSpec) -> tuple:
    """(c-root, d-root) of the collapsed kappa = 1 quartic, via the nested radical."""
    a1 = spec.h0.real + 1.0
    rad = math.sqrt(0.25 * a1 * a1 + 0.25 * spec.h0.imag ** 2)
    lam_r = math.sqrt(0.5 * a1 + rad)
    return lam_r, -lam_r


# ---------------------------------------------------------------------------
# convention pinning
# ---------------------------------------------------------------------------

_CANDIDATES = tuple(
    (sign, conj, shift)
    for sign in (-1, +1)
    for conj in (True, False)
    for shift in (1, 0)
)

_PIN: dict | None = None


def _candidate_index(lam: complex, conj: bool, shift: int) -> ComplexIndex:
    base = -(lam.conjugate() if conj else lam)
    return ComplexIndex.of(base).shifted(shift)


def _build_phi(lam: complex, m: int, sign: int, conj: bool, shift: int) -> tuple:
    idx = _candidate_index(lam, conj, shift)
    rp = routh_polynomial(m, idx)
    phi = EtaSolution(0.5 * (1.0 - lam.real), sign * lam.imag, rp.poly)
    return rp, phi


def pinned_convention() -> dict:
    """The frozen index/sign convention record, selected by residual once.

    Probes a deliberately asymmetric shape-invariant case at order 1 so the
    conjugation choice is visible, and verifies the winner on a type-d probe.
    """
    global _PIN
    if _PIN is not None:
        return _PIN
    spec = gendenshtein_params(2.5, 0.5)
    qr = quartic_lambda_roots(spec, 1)
    lam = _lambda_from_root(spec, max(qr.c_candidates))
    eps = -(lam.real - 1.5) ** 2 / spec.tp.a
    samples = np.linspace(-6.0, 6.0, 61)
    best = None
    for sign, conj, shift in _CANDIDATES:
        _rp, phi = _build_phi(lam, 1, sign, conj, shift)
        res = rcsle_residual(spec, eps, phi, samples)
        if best is None or res < best[0]:
            best = (res, sign, conj, shift)
    res, sign, conj, shift = best
    if res >= RESIDUAL_GATE:
        raise ConventionUnresolved("best candidate residual %g above gate" % res)
    lam_d = _lambda_from_root(spec, min(qr.d_roots))
    eps_d = -(1.5 - lam_d.real) ** 2 / spec.tp.a
    _rp, phi_d = _build_phi(lam_d, 1, sign, conj, shift)
    res_d = rcsle_residual(spec, eps_d, phi_d, samples)
    if res_d >= RESIDUAL_GATE:
        raise ConventionUnresolved("pinned convention fails the type-d probe: %g" % res_d)
    _PIN = {
        "sign": sign,
        "conjugate": conj,
        "shift": shift,
        "probe_residual": res,
        "probe_residual_type_d": res_d,
    }
    return _PIN


def _pinned_phi(lam: complex, m: int) -> tuple:
    pin = pinned_convention()
    return _build_phi(lam, m, pin["sign"], pin["conjugate"], pin["shift"])


# ---------------------------------------------------------------------------
# residual oracle
# ---------------------------------------------------------------------------

def rcsle_residual(spec: PotentialSpec, epsilon: float, phi, eta_samples) -> float:
    """max over samples of |Phi'' + I(eta; e) Phi| / (1 + |Phi|).

    ``phi`` should expose exact second derivatives via ``d2``; plain callables
    fall back to central differences (testing convenience only).
    """
    etas = np.asarray(eta_samples, dtype=float)
    if hasattr(phi, "d2"):
        vals = np.asarray(phi(etas), dtype=float)
        second = np.asarray(phi.d2(etas), dtype=float)
    else:
        h = 1e-5
        vals = np.array([phi(e) for e in etas])
        second = np.array([(phi(e + h) - 2.0 * phi(e) + phi(e - h)) / h ** 2 for e in etas])
    inv = geometry.bose_invariant_eval(spec, epsilon, etas)
    res = np.abs(second + inv * vals) / (1.0 + np.abs(vals))
    return float(np.max(res))


# ---------------------------------------------------------------------------
# spectrum enumeration and assembly
# ---------------------------------------------------------------------------

def _normalize_phi(spec: PotentialSpec, phi: EtaSolution) -> EtaSolution:
    """Scale so that integral Phi^2 * density deta = 1 (hence psi is L2-normal)."""

    def integrand(eta):
        return phi(eta) ** 2 * geometry.tangent_eval(spec.tp, eta) / (1.0 + eta ** 2) ** 2

    norm2 = oracle.adaptive_quadrature(integrand, -np.inf, np.inf, tol=1e-10)
    return EtaSolution(phi.power, phi.atan_coeff, phi.poly, phi.scale / math.sqrt(norm2))


@lru_cache(maxsize=64)
def enumerate_bound_spectrum(spec: PotentialSpec) -> Spectrum:
    """Constructive bound-state enumeration: walk n upward until no root fits.

    For each n the quartic at order n is solved exactly; an admissible root
    must exceed n + 1/2 and yields e_n = -(lambda_R - n - 1/2)^2 / a.  The
    closed-form level-count (floor of Re lambda0, read as a maximal index) is
    recorded alongside for comparison but never drives the loop.
    """
    notes = []
    states = []
    a = spec.tp.a
    n = 0
    while True:
        qr = quartic_lambda_roots(spec, n)
        if not qr.c_candidates:
            break
        if len(qr.c_candidates) > 1:
            notes.append("order %d: %d admissible roots; kept the largest" % (n, len(qr.c_candidates)))
        lam_r = max(qr.c_candidates)
        energy = -((lam_r - n - 0.5) ** 2) / a
        if abs(energy) < THRESHOLD_ENERGY:
            notes.append("order %d: |e| < %g treated as threshold, not bound" % (n, THRESHOLD_ENERGY))
            break
        lam = _lambda_from_root(spec, lam_r)
        rp, phi = _pinned_phi(lam, n)
        phi = _normalize_phi(spec, phi)
        res = rcsle_residual(spec, energy, phi, np.linspace(-8.0, 8.0, 33))
        if res >= RESIDUAL_GATE:
            raise ConventionUnresolved("state n=%d residual %g above gate" % (n, res))
        states.append(BoundState(n=n, energy=energy, lam=lam, poly=rp, phi=phi))
        n += 1
    lam0 = spec.lambda0
    return Spectrum(
        states=tuple(states),
        n_max_constructive=len(states),
        n_max_formula=math.floor(lam0.real),
        notes=tuple(notes),
    )


def assemble_eigenfunction(spec: PotentialSpec, n: int, vmap: VariableMap) -> BoundState:
    """Fully sampled n-th bound state, psi = (eta')^(-1/2) Phi(eta(x))."""
    spectrum = enumerate_bound_spectrum(spec)
    if n >= len(spectrum.states):
        raise NoSuchRoot("no bound state with index %d" % n)
    light = spectrum.states[n]
    if not (light.lam.real > n + 0.5):
        raise PreconditionViolated("admissibility lambda_R > n + 1/2 violated")
    n_roots = len(real_roots(light.poly.poly))
    if n_roots != n:
        raise ConventionUnresolved(
            "state %d polynomial has %d real roots" % (n, n_roots)
        )
    etas = vmap.eta_grid
    psi = light.phi(etas) / np.sqrt(vmap.deriv(etas))
    return BoundState(
        n=light.n,
        energy=light.energy,
        lam=light.lam,
        poly=light.poly,
        phi=light.phi,
        psi=psi,
        x_grid=vmap.x_grid,
    )


def aeh_solution(spec: PotentialSpec, kind: str, m: int, vmap: VariableMap | None = None) -> AehSolution:
    """Closed-form solution of the requested kind and order.

    Type c are the normalizable branch (the bound states); type d carry the
    negative quartic root, lie below the ground level, and are the Darboux
    seeds when their polynomial factor is nodeless.
    """
    if kind not in ("c", "d"):
        raise ValueError("kind must be 'c' or 'd'")
    qr = quartic_lambda_roots(spec, m)
    a = spec.tp.a
    if kind == "c":
        if not qr.c_candidates:
            raise NoSuchRoot("no type-c root at order %d" % m)
        lam_r = max(qr.c_candidates)
        energy = -((lam_r - m - 0.5) ** 2) / a
    else:
        if not qr.d_roots:
            raise NoSuchRoot("no type-d root at order %d" % m)
        lam_r = min(qr.d_roots)
        energy = -((m + 0.5 - lam_r) ** 2) / a
    lam = _lambda_from_root(spec, lam_r)
    rp, phi = _pinned_phi(lam, m)
    res = rcsle_residual(spec, energy, phi, np.linspace(-8.0, 8.0, 33))
    if res >= RESIDUAL_GATE:
        raise ConventionUnresolved("aeh %s,%d residual %g above gate" % (kind, m, res))
    nodeless = len(real_roots(rp.poly)) == 0 if rp.poly.degree >= 1 else True
    psi = None
    x_grid = None
    if vmap is not None:
        etas = vmap.eta_grid
        psi = phi(etas) / np.sqrt(vmap.deriv(etas))
        x_grid = vmap.x_grid
    return AehSolution(
        kind=kind, m=m, energy=energy, lam=lam, poly=rp,
        nodeless=nodeless, phi=phi, psi=psi, x_grid=x_grid,
    )


# ---------------------------------------------------------------------------
# named potentials and identity checks
# ---------------------------------------------------------------------------

def gendenshtein_params(a_g: float, b_g: float) -> PotentialSpec:
    """The shape-invariant kappa = 1 member with lambda0 = a + 1/2 + i*b.

    V(x) = [b^2 - a(a+1)]/cosh^2 x + (2a+1) b sinh x / cosh^2 x, bound levels
    -(a-n)^2 and type-d companions at -(a+m+1)^2.
    """
    if not a_g > 0:
        raise ValueError("a must be positive")
    lam0 = complex(a_g + 0.5, b_g)
    return PotentialSpec(h0=lam0 * lam0 - 1.0, tp=TangentPolySpec(a=1.0, kappa_plus=1.0))


@dataclass(frozen=True)
class SigmaRhoReport:
    sigma: float
    rho: complex
    sum_identity_dev: float     # (sigma-1/2)^2 + (rho-1/2)^2 vs h_R(e) + 1
    product_identity_dev: float  # 2 lambda_R lambda_I vs Im(h0)


def milson_sigma_rho(spec: PotentialSpec, epsilon: float) -> SigmaRhoReport:
    """Exponent-difference parameters sigma = 1/2 - lambda_R, rho = 1/2 - i*lambda_I,

    with both defining identities evaluated and reported as deviations."""
    lam = lambda_of_energy(spec, epsilon).value
    sigma = 0.5 - lam.real
    rho = 0.5 - 1j * lam.imag
    lhs = (sigma - 0.5) ** 2 + (rho - 0.5) ** 2
    rhs = spec.h0.real + 1.0 - spec.energy_coupling * epsilon
    dev_sum = abs(lhs - rhs)
    dev_prod = abs(2.0 * lam.real * lam.imag - spec.h0.imag)
    return SigmaRhoReport(sigma=sigma, rho=rho,
                          sum_identity_dev=float(dev_sum),
                          product_identity_dev=float(dev_prod))


def _poch(x: complex, n: int) -> complex:
    out = 1.0 + 0j
    for j in range(n):
        out *= x + j
    return out


def stevenson_identity_check(spec: PotentialSpec, n: int, eta_samples) -> float:
    """Max relative deviation between the truncated hypergeometric solution form
    and its Routh-polynomial resummation at level n.

    With xi = 2/(1 + i*eta) and lambda the level-n branch value, the identity

        xi^-n F(-n, lambda*-n; 2(lambda_R-n); xi)
            = (-i)^n n! / (2 lambda_R - 2n)_n * R_n^(1-lambda*)(eta)

    holds wherever the lower Pochhammers are nonzero.
    """
    qr = quartic_lambda_roots(spec, n)
    if not qr.c_candidates:
        raise NoSuchRoot("no admissible level at n=%d" % n)
    lam = _lambda_from_root(spec, max(qr.c_candidates))
    c_param = 2.0 * (lam.real - n)
    for j in range(1, n + 1):
        if abs(c_param + (j - 1)) < 1e-14:
            raise DegenerateParameter("denominator Pochhammer vanishes at j=%d" % j)
    rp = routh_polynomial(n, ComplexIndex.of(1.0 - lam.conjugate()))
    coeffs = rp.poly.as_floats()
    worst = 0.0
    for eta in np.asarray(eta_samples, dtype=float):
        xi = geometry.stevenson_xi(eta)
        term = 1.0 + 0j
        acc = 1.0 + 0j
        for j in range(n):
            term *= (-n + j) * (lam.conjugate() - n + j) / ((c_param + j) * (j + 1)) * xi
            acc += term
        lhs = xi ** (-n) * acc
        scale = ((-1j) ** n) * math.factorial(n) / _poch(c_param, n)
        rhs = scale * np.polynomial.polynomial.polyval(eta, coeffs)
        dev = abs(lhs - rhs) / max(1.0, abs(rhs))
        worst = max(worst, float(dev))
    return worst


# ---------------------------------------------------------------------------
# nodelessness scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanCell:
    a: float
    b: float
    empirical_nodeless: bool | None
    threshold_prediction: bool | None
    discriminant_prediction: bool | None
    consistent: bool | None  # exact root count vs sign-change count


def nodeless_threshold_b2(a_g: float) -> float:
    """Quoted order-2 nodelessness bound on the asymmetry: b^2 < (2a+5)^2/(6a+11)."""
    return (2.0 * a_g + 5.0) ** 2 / (6.0 * a_g + 11.0)


def _scan_cell(a_g: float, b_g: float, m: int) -> ScanCell:
    from .routh import discriminant_order2

    spec = gendenshtein_params(a_g, b_g)
    try:
        sol = aeh_solution(spec, "d", m)
    except NoSuchRoot:
        return ScanCell(a_g, b_g, None, None, None, None)
    root_count = len(real_roots(sol.poly.poly)) if sol.poly.poly.degree >= 1 else 0
    empirical = root_count == 0
    etas = np.linspace(-40.0, 40.0, 1601)
    changes = oracle.count_sign_changes(lambda e: sol.phi(e), etas)
    consistent = changes == root_count
    disc_pred = None
    if m == 2:
        disc_pred = discriminant_order2(sol.poly.index).value < 0.0
    thresh = bool(b_g ** 2 < nodeless_threshold_b2(a_g)) if m == 2 else None
    return ScanCell(
        a=a_g, b=b_g,
        empirical_nodeless=empirical,
        threshold_prediction=thresh,
        discriminant_prediction=disc_pred,
        consistent=consistent,
    )


def nodeless_scan(a_range, b_range, m: int, na: int = 16, nb: int = 16, workers: int = 1):
    """Three-way nodelessness map over a (a, b) parameter grid at fixed order.

    Per cell: the exact root count of the type-d polynomial factor (with a
    sign-change cross-check of the assembled solution), the quoted asymmetry
    threshold, and the canonical discriminant sign.  Disagreements are
    reported, not resolved.
    """
    if m < 2 or m % 2:
        raise PreconditionViolated("scan order must be even and >= 2")
    if na < 2 or nb < 2:
        raise PreconditionViolated("grid resolutions must be at least 2")
    avals = np.linspace(a_range[0], a_range[1], na)
    bvals = np.linspace(b_range[0], b_range[1], nb)
    tasks = [(float(a), float(b), m) for a in avals for b in bvals]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_scan_cell_star, tasks))
    else:
        cells = [_scan_cell(*t) for t in tasks]
    return cells


def _scan_cell_star(args):
    return _scan_cell(*args)
