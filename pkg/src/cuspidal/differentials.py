"""Differential 1-forms on a cusp: values, tuning constants, and the minimal
standard basis computed by Delorme's algorithm.

The differential value of omega = A dx + B dy is read off the implicit
equation through the associated vector field X_omega = B d/dx - A d/dy: a
final reduction h of X_omega(f) modulo {f} with leading power (a, b) gives
nu(omega) = n(a+1) + m(b+1) - n*m, and a reduction that vanishes to the
horizon means the value is infinite.  The Newton-Puiseux parametrization
provides an independent oracle for the same number.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _series
from .curve import CurveEquation, Parametrization, Semigroup
from .poly import Exponent, TruncatedPoly
from .rationals import Rat, rat
from .semimodules import AbstractSemimodule, _axis, axes_and_criticals
from .standard_basis import FinalReduction, final_reduction


class ValueMismatch(ValueError):
    """Tuning requires both 1-forms to realize the same finite value."""


@dataclass(frozen=True)
class OneForm:
    """omega = dx_coeff * dx + dy_coeff * dy with polynomial coefficients."""

    dx: TruncatedPoly
    dy: TruncatedPoly

    @classmethod
    def d(cls, h: TruncatedPoly) -> "OneForm":
        """The exact differential dh."""
        return cls(h.partial_x(), h.partial_y())

    @classmethod
    def basic(cls, eq_or_order, which: str) -> "OneForm":
        """dx or dy over the given equation's (or order's) ground ring.

        A CurveEquation argument also fixes the truncation horizon of the
        coefficients, so products against its f are not clamped."""
        horizon = None
        f = getattr(eq_or_order, "f", None)
        if f is not None:
            horizon = f.horizon
        order = getattr(eq_or_order, "sg", eq_or_order)
        order = getattr(order, "order", order)
        one = TruncatedPoly.monomial(order, 1, (0, 0), horizon)
        zero = TruncatedPoly.zero(order, horizon)
        if which == "dx":
            return cls(one, zero)
        if which == "dy":
            return cls(zero, one)
        raise ValueError("which must be 'dx' or 'dy'")

    @property
    def is_zero(self) -> bool:
        return self.dx.is_zero and self.dy.is_zero

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.dx - other.dx, self.dy - other.dy)

    def scale(self, c) -> "OneForm":
        c = rat(c)
        return OneForm(self.dx.scale(c), self.dy.scale(c))

    def mul_monomial(self, coeff, shift: Exponent) -> "OneForm":
        return OneForm(self.dx.mul_monomial(coeff, shift),
                       self.dy.mul_monomial(coeff, shift))


def apply_vector_field(omega: OneForm, f: TruncatedPoly) -> TruncatedPoly:
    """X_omega(f) = dy_coeff * f_x - dx_coeff * f_y."""
    return omega.dy * f.partial_x() - omega.dx * f.partial_y()


def _value_of_power(sg: Semigroup, e: Exponent) -> int:
    return sg.n * (e[0] + 1) + sg.m * (e[1] + 1) - sg.n * sg.m


def differential_value(omega: OneForm, eq: CurveEquation) -> int | None:
    """nu(omega) from the implicit equation; None = infinite to the horizon."""
    red = final_reduction(apply_vector_field(omega, eq.f), [eq.f])
    if red.vanished:
        return None
    return _value_of_power(eq.sg, red.poly.leading_power)


def monomial_value(omega: OneForm) -> int:
    """min of the weighted degrees of x * dx_coeff and y * dy_coeff."""
    if omega.is_zero:
        raise ValueError("monomial value of the zero form")
    order = omega.dx.order if omega.dx.terms or not omega.dy.terms else omega.dy.order
    n, m = order.n, order.m
    best = None
    da = omega.dx.min_degree()
    if da is not None:
        best = n + da
    db = omega.dy.min_degree()
    if db is not None:
        best = m + db if best is None else min(best, m + db)
    return best


def oracle_differential_value(omega: OneForm, param: Parametrization) -> int | None:
    """nu(omega) = ord_t(pullback) + 1 along x = xi t^n, y = y(t).

    The pullback (A(phi) * xi * n * t^{n-1} + B(phi) * y'(t)) dt is trusted
    through power t_horizon - 1; None marks an order past that window.
    """
    n = param.n
    upto = param.t_horizon - 1
    out = _series.zeros(upto)
    for (a, b), c in omega.dx.terms.items():
        shift = n * a + n - 1
        if shift <= upto:
            _series.add_shifted(out, param.y_power(b), shift,
                                c * param.x_coeff ** (a + 1) * n)
    for (a, b), c in omega.dy.terms.items():
        shift = n * a
        if shift <= upto:
            _series.add_shifted(out, param.y_power_dy(b), shift,
                                c * param.x_coeff ** a)
    o = _series.ord_of(out)
    return None if o is None else o + 1


def aligned_t_horizon(eq: CurveEquation) -> int:
    """The parametrization horizon that makes the oracle and the implicit
    route detect exactly the same window of finite values for this equation:
    t_horizon = poly_horizon - n*m + n + m."""
    sg = eq.sg
    return eq.f.horizon - sg.n * sg.m + sg.n + sg.m


def tuning_constant(eta1: OneForm, eta2: OneForm, eq: CurveEquation) -> Rat:
    """The scalar mu+ = -mu1/mu2 from the leading terms of final reductions
    of X_eta1(f), X_eta2(f); guarantees nu(eta1 + mu+ eta2) > nu(eta1)."""
    r1 = final_reduction(apply_vector_field(eta1, eq.f), [eq.f])
    r2 = final_reduction(apply_vector_field(eta2, eq.f), [eq.f])
    if r1.vanished or r2.vanished:
        raise ValueMismatch("tuning needs finite values on both sides")
    lt1, lt2 = r1.poly.leading, r2.poly.leading
    if lt1.exponent != lt2.exponent:
        raise ValueMismatch(
            f"values differ: leading powers {lt1.exponent} vs {lt2.exponent}")
    return -lt1.coeff / lt2.coeff


@dataclass(frozen=True)
class SemimoduleBasis:
    """Basis of the semimodule of differential values with axes and critical
    values: lambdas = (lambda_{-1}, ..., lambda_s), axes = (u_1, ..., u_{s+1}),
    critical = (t_{-1}, ..., t_{s+1})."""

    sg: Semigroup
    lambdas: tuple
    axes: tuple
    critical: tuple

    def __post_init__(self) -> None:
        self.abstract()  # runs the basis validation
        if len(self.axes) != len(self.lambdas) - 1:
            raise ValueError("need one axis per extension step plus the final one")
        if len(self.critical) != len(self.lambdas) + 1:
            raise ValueError("critical values run from t_{-1} to t_{s+1}")

    @property
    def s(self) -> int:
        return len(self.lambdas) - 2

    def abstract(self) -> AbstractSemimodule:
        return AbstractSemimodule(self.sg, self.lambdas)


@dataclass(frozen=True)
class DifferentialBasis:
    """Minimal standard basis: 1-forms omega_i, their value data, and the
    final reductions h_i of X_{omega_i}(f) whose leading powers encode the
    values."""

    forms: tuple
    values: SemimoduleBasis
    reductions: tuple

    @property
    def leading_powers(self) -> tuple:
        return tuple(h.leading_power for h in self.reductions)


def _shifted_reduction(eq: CurveEquation, h: TruncatedPoly, coeff, shift: Exponent) -> FinalReduction:
    """Final reduction of coeff * x^shift * h modulo {f}."""
    return final_reduction(h.mul_monomial(coeff, shift), [eq.f])


def delorme(eq: CurveEquation) -> DifferentialBasis:
    """Delorme's algorithm: the minimal standard basis of the differentials.

    Starting from (dx, dy), each round computes the axis u_i, combines the two
    monomial multiples that realize it with a tuning constant, and drives the
    combination through value-increasing corrections against the basis built
    so far.  A round ends with a fresh basis 1-form (its value is a gap not
    covered by the previous ones) or with the value escaping to infinity,
    which terminates the algorithm.  A chain whose value reaches the conductor
    is declared infinite: past that point every value is covered, so no final
    reduction can stop there.
    """
    sg = eq.sg
    n, m, c_gamma = sg.n, sg.m, sg.conductor
    f = eq.f

    forms = [OneForm.basic(eq, "dx"), OneForm.basic(eq, "dy")]
    h_minus1 = final_reduction(apply_vector_field(forms[0], f), [f])
    h_zero = final_reduction(apply_vector_field(forms[1], f), [f])
    if h_minus1.poly.leading_power != (0, n - 1):
        raise AssertionError("reduction of X_dx(f) must lead at (0, n-1)")
    if h_zero.poly.leading_power != (m - 1, 0):
        raise AssertionError("reduction of X_dy(f) must lead at (m-1, 0)")
    reductions = [h_minus1.poly, h_zero.poly]
    lambdas = [n, m]

    def covered_index(v: int) -> int | None:
        """Largest basis index whose shifted semigroup contains v."""
        for idx in range(len(lambdas) - 1, -1, -1):
            if (v - lambdas[idx]) in sg:
                return idx
        return None

    for i in range(1, n - 1):
        u = _axis(sg, tuple(lambdas), i)
        eta, r = _combine_axis_pair(eq, forms, reductions, lambdas, u)
        # Correct eta against the current basis until its value leaves the
        # covered set or escapes.
        while True:
            if r.vanished:
                value = None
                break
            value = _value_of_power(sg, r.poly.leading_power)
            if value >= c_gamma:
                value = None
                break
            idx = covered_index(value)
            if idx is None:
                break
            shift = sg.decompose(value - lambdas[idx])
            if shift is None:
                raise AssertionError("covered value without a semigroup shift")
            part = _shifted_reduction(eq, reductions[idx], 1, shift)
            if part.vanished:
                raise AssertionError("shifted basis reduction vanished")
            if part.poly.leading_power != r.poly.leading_power:
                raise AssertionError("shifted reduction misaligned with the chain")
            mu = -r.poly.leading.coeff / part.poly.leading.coeff
            eta = eta + forms[idx].mul_monomial(mu, shift)
            new_r = final_reduction(r.poly + part.poly.scale(mu), [f])
            if not new_r.vanished:
                new_value = _value_of_power(sg, new_r.poly.leading_power)
                if new_value <= value:
                    raise AssertionError("correction failed to raise the value")
            r = new_r

        if value is None:
            break
        lambdas.append(value)
        forms.append(eta)
        reductions.append(r.poly)

    axes, crit = axes_and_criticals(AbstractSemimodule(sg, tuple(lambdas)))
    values = SemimoduleBasis(sg, tuple(lambdas), axes, crit)
    return DifferentialBasis(tuple(forms), values, tuple(reductions))


def _combine_axis_pair(eq: CurveEquation, forms, reductions, lambdas, u: int):
    """Build eta = eta1 + mu+ eta2 from the two monomial multiples realizing
    the axis u, together with a final reduction of X_eta(f).

    The multiple of the newest form is a pure power of one variable and the
    matching earlier multiple a pure power of the other (below n*m the
    decomposition is unique, so exactly one pattern fits -- checked)."""
    sg = eq.sg
    n, m = sg.n, sg.m
    newest = len(lambdas) - 1
    candidates = []
    d_new = u - lambdas[newest]
    for k in range(newest):
        d_old = u - lambdas[k]
        if d_new % n == 0 and d_old % m == 0:
            candidates.append((k, (d_new // n, 0), (0, d_old // m)))
        if d_new % m == 0 and d_old % n == 0:
            candidates.append((k, (0, d_new // m), (d_old // n, 0)))
    if len(candidates) != 1:
        raise AssertionError(
            f"axis {u} admits {len(candidates)} pure decompositions, expected 1")
    k, shift_new, shift_old = candidates[0]

    part_new = _shifted_reduction(eq, reductions[newest], 1, shift_new)
    part_old = _shifted_reduction(eq, reductions[k], 1, shift_old)
    if part_new.vanished or part_old.vanished:
        raise AssertionError("axis reductions vanished unexpectedly")
    lt_new, lt_old = part_new.poly.leading, part_old.poly.leading
    if lt_new.exponent != lt_old.exponent:
        raise AssertionError("axis pair does not share a leading power")
    mu_plus = -lt_new.coeff / lt_old.coeff
    eta = forms[newest].mul_monomial(1, shift_new) + forms[k].mul_monomial(mu_plus, shift_old)
    r = final_reduction(part_new.poly + part_old.poly.scale(mu_plus), [eq.f])
    return eta, r
