"""Certified Bernstein-Sato roots of a cusp via the residue criterion.

Every gap value j in the cuspidal set J yields two candidate roots -beta_j
and -alpha_j = -(beta_j + 1).  Which one is realized is decided by an exact
residue: a Gamma-weighted polynomial in the nice-form coefficients z_j whose
non-vanishing at some test exponent in M certifies -beta_j.  Residues are
kept symbolic (GammaExpr) so the vanishing decision is exact rational
arithmetic whenever the expression collapses to a single canonical group;
multi-group survivors are declared nonzero under a flagged independence
assumption, always backed by an interval-arithmetic certificate.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import factorial

import mpmath

from .curve import CurveEquation, Semigroup
from .differentials import delorme
from .rationals import ONE, Rat, rat
from .semimodules import AbstractSemimodule, classify_four, elements_outside


class NegativeK(ValueError):
    """The residue target k = beta*nm - n*a - m*b came out negative."""


class PreconditionViolation(ValueError):
    """The curve is outside the scope of the requested battery."""


class CertificateError(RuntimeError):
    """Interval evaluation could not separate the expression from zero."""


MAX_PRECISION_BITS = 1024
RELATIVE_WIDTH_GOAL = mpmath.mpf("1e-30")


@dataclass(frozen=True)
class RootCandidate:
    """The two rationals attached to j in J: beta = (j+n+m)/nm and alpha = beta+1."""

    j: int
    beta: Rat
    alpha_val: Rat

    def __post_init__(self) -> None:
        if not 0 < self.beta < 1:
            raise ValueError(f"beta must lie in (0,1), got {self.beta}")
        if self.alpha_val != self.beta + 1:
            raise ValueError("alpha_val must equal beta + 1")

    @classmethod
    def for_gap(cls, sg: Semigroup, j: int) -> "RootCandidate":
        beta = Rat(j + sg.n + sg.m, sg.n * sg.m)
        return cls(j, beta, beta + 1)


@dataclass(frozen=True)
class DeltaSequence:
    """A multiset of parts from J: entries ((part, multiplicity), ...) with
    every multiplicity positive, parts strictly increasing."""

    entries: tuple

    @property
    def total(self) -> int:
        return sum(d for _, d in self.entries)

    @property
    def weight(self) -> int:
        return sum(l * d for l, d in self.entries)

    def multiplicity(self, l: int) -> int:
        for part, d in self.entries:
            if part == l:
                return d
        return 0


def delta_sequences(parts, k: int) -> frozenset:
    """All ways of writing k as a non-negative combination of the given parts.

    DFS over the parts in decreasing order; k = 0 yields the empty (all-zero)
    sequence.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    uniq = sorted(set(parts), reverse=True)
    out: list[DeltaSequence] = []
    chosen: list[tuple] = []

    def rec(i: int, rem: int) -> None:
        if rem == 0:
            out.append(DeltaSequence(tuple(sorted(chosen))))
            return
        if i == len(uniq):
            return
        part = uniq[i]
        for d in range(rem // part, 0, -1):
            chosen.append((part, d))
            rec(i + 1, rem - d * part)
            chosen.pop()
        rec(i + 1, rem)

    rec(0, k)
    return frozenset(out)


@dataclass(frozen=True)
class GammaExpr:
    """Sum of terms coeff * Gamma(r1) * Gamma(r2) in canonical form.

    Arguments are recursively lowered into (0, 1] through
    Gamma(r) = (r-1) Gamma(r-1), the multipliers folding into the rational
    coefficient; the two arguments of a group are stored sorted (the product
    is symmetric) and groups with coefficient 0 are dropped.
    """

    groups: tuple  # ((r1, r2, ...), coeff) pairs, argument tuples sorted

    @classmethod
    def from_terms(cls, terms) -> "GammaExpr":
        acc: dict[tuple, Rat] = {}
        for coeff, args in terms:
            c = rat(coeff)
            if not c:
                continue
            lowered = []
            for r in args:
                r = rat(r)
                if r <= 0:
                    raise ValueError(f"gamma argument must be positive, got {r}")
                while r > 1:
                    r = r - 1
                    c = c * r
                lowered.append(r)
            key = tuple(sorted(lowered))
            prev = acc.get(key)
            acc[key] = c if prev is None else prev + c
        groups = tuple(sorted((k, v) for k, v in acc.items() if v))
        return cls(groups)

    @property
    def is_zero(self) -> bool:
        return not self.groups

    def scale(self, c) -> "GammaExpr":
        c = rat(c)
        if not c:
            return GammaExpr(())
        return GammaExpr(tuple((k, c * v) for k, v in self.groups))

    def __str__(self) -> str:
        if not self.groups:
            return "0"
        parts = []
        for args, coeff in self.groups:
            gammas = "*".join(f"Gamma({r})" for r in args)
            parts.append(f"({coeff})*{gammas}" if gammas else f"({coeff})")
        return " + ".join(parts)


def residue(eq: CurveEquation, ab, beta) -> GammaExpr:
    """The residue at test exponent (a, b) for the candidate beta, as a
    canonical GammaExpr; the positive scalar prefactor is dropped since only
    vanishing matters.

    Sums over all part-decompositions of k = beta*nm - n*a - m*b drawn from
    the gap values with nonzero coefficient (others cannot contribute):
    (-1)^{sum delta} Gamma((sum delta*p1 + a)/m) Gamma((sum delta*p2 + b)/n)
    prod z^delta / delta!.
    """
    if eq.form != "nice":
        raise ValueError("residues are defined against the nice form")
    sg = eq.sg
    n, m = sg.n, sg.m
    a, b = ab
    k_rat = rat(beta) * (n * m) - n * a - m * b
    k = int(k_rat)
    if k != k_rat:
        raise ValueError(f"beta*nm - n*a - m*b must be an integer, got {k_rat}")
    if k < 0:
        raise NegativeK(f"residue target k = {k} is negative")
    z = {j: c for j, c in eq.nice_coeffs.items() if c}
    sets = eq.sets
    terms = []
    for seq in delta_sequences(tuple(z), k):
        s1 = a
        s2 = b
        coeff = ONE if seq.total % 2 == 0 else -ONE
        for l, d in seq.entries:
            p1, p2 = sets.p_of(l)
            s1 += d * p1
            s2 += d * p2
            coeff = coeff * z[l] ** d / factorial(d)
        terms.append((coeff, (Rat(s1, m), Rat(s2, n))))
    return GammaExpr.from_terms(terms)


class ResidueDecision(enum.Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    NONZERO_ASSUMING_INDEPENDENCE = "nonzero_assuming_independence"


@dataclass(frozen=True)
class Certificate:
    """Outward-rounded interval enclosure of a GammaExpr's value."""

    lower: str
    upper: str
    precision_bits: int
    excludes_zero: bool
    relative_width: str


def _interval_value(expr: GammaExpr, bits: int):
    iv = mpmath.iv
    saved = iv.prec
    iv.prec = bits
    try:
        total = iv.mpf(0)
        for args, coeff in expr.groups:
            term = iv.mpf(int(coeff.numerator)) / iv.mpf(int(coeff.denominator))
            for r in args:
                term = term * iv.gamma(iv.mpf(int(r.numerator)) / iv.mpf(int(r.denominator)))
            total = total + term
        return total
    finally:
        iv.prec = saved


def interval_certificate(expr: GammaExpr, precision: int = 256) -> Certificate:
    """Certify the sign of a nonzero-looking expression by interval
    evaluation, doubling the working precision until zero is excluded and the
    enclosure is tight (relative width under 1e-30), up to 1024 bits."""
    if expr.is_zero:
        return Certificate("0", "0", precision, False, "0")
    bits = max(precision, 8)
    ceiling = max(MAX_PRECISION_BITS, bits)
    while True:
        val = _interval_value(expr, bits)
        # .a/.b are width-zero intervals; unwrap to plain floats so that
        # comparisons and rendering below use the ordinary real context.
        lo = mpmath.mp.make_mpf(val.a._mpi_[0])
        hi = mpmath.mp.make_mpf(val.b._mpi_[1])
        excludes = bool(lo > 0) or bool(hi < 0)
        width = hi - lo
        mid = abs(hi + lo) / 2
        rel = width / mid if mid > 0 else mpmath.inf
        if (excludes and rel < RELATIVE_WIDTH_GOAL) or bits >= ceiling:
            return Certificate(mpmath.nstr(lo, 40), mpmath.nstr(hi, 40),
                               bits, excludes, mpmath.nstr(rel, 10))
        bits = min(2 * bits, ceiling)


def residue_is_zero(expr: GammaExpr, precision: int = 256) -> ResidueDecision:
    """Three-valued vanishing decision: zero when no canonical groups remain,
    nonzero for a single surviving group (Gamma is positive on (0,1]), and
    nonzero-assuming-independence for several groups.  Every nonzero verdict
    is cross-checked by an interval certificate; an enclosure that cannot
    exclude zero raises instead of guessing."""
    if expr.is_zero:
        return ResidueDecision.ZERO
    cert = interval_certificate(expr, precision)
    if not cert.excludes_zero:
        raise CertificateError(
            f"interval [{cert.lower}, {cert.upper}] at {cert.precision_bits} "
            "bits does not exclude zero")
    if len(expr.groups) == 1:
        return ResidueDecision.NONZERO
    return ResidueDecision.NONZERO_ASSUMING_INDEPENDENCE


@dataclass(frozen=True)
class RootDecision:
    """Outcome of the residue criterion for one j in J."""

    kind: str  # "beta_root" | "alpha_root"
    candidate: RootCandidate
    root: Rat
    witness: tuple | None = None
    witness_residue: GammaExpr | None = None
    decision: ResidueDecision | None = None
    certificate: Certificate | None = None


def decide_root(eq: CurveEquation, j: int, precision: int = 256) -> RootDecision:
    """-beta_j is a root iff some test exponent in M has nonzero residue;
    otherwise -alpha_j is.  Test exponents are scanned by increasing residue
    target k (then lexicographically), so the cheap decompositions -- and in
    the certified families the theory's own witness -- come first."""
    sg = eq.sg
    n, m = sg.n, sg.m
    sets = eq.sets
    if j not in sets.j_to_p:
        raise ValueError(f"{j} is not a cuspidal gap value of {(n, m)}")
    cand = RootCandidate.for_gap(sg, j)
    points = sorted((j + n + m - n * a - m * b, a, b) for (a, b) in sets.M)
    for k, a, b in points:
        if k < 0:
            continue
        expr = residue(eq, (a, b), cand.beta)
        if expr.is_zero:
            continue
        decision = residue_is_zero(expr, precision)
        cert = interval_certificate(expr, precision)
        return RootDecision("beta_root", cand, -cand.beta, (a, b), expr,
                            decision, cert)
    return RootDecision("alpha_root", cand, -cand.alpha_val)


def certified_roots_from_semimodule(sm) -> frozenset:
    """The root subset certified directly by the semimodule of differential
    values: all of -(Lambda \\ Gamma)/nm when n <= 4, and the -(lambda_1 +
    Gamma \\ Gamma)/nm tail for larger n (empty when the Zariski invariant
    vanishes)."""
    sg = sm.sg
    basis = getattr(sm, "lambdas", None)
    if basis is None:
        basis = sm.basis
    basis = tuple(basis)
    nm = sg.n * sg.m
    if sg.n <= 4:
        lams = elements_outside(AbstractSemimodule(sg, basis), 0)
    elif len(basis) < 3:
        return frozenset()
    else:
        lam1 = basis[2]
        lams = tuple(k for k in range(lam1, sg.conductor)
                     if (k - lam1) in sg and k not in sg)
    return frozenset(-Rat(lam, nm) for lam in lams)


@dataclass(frozen=True)
class ZariskiReport:
    """Cross-check of the three equivalent detections of the first extra
    basis value lambda_1 = j_1 + n + m, plus the follow-up residues for the
    rest of (lambda_1 + Gamma) \\ Gamma."""

    j1: int | None
    lambda1: int | None
    residue_j1: int | None
    chain: tuple     # ((ell, decision value), ...) for ell in J up to the hit
    dagger: tuple    # ((lam, (a, b), decision value), ...)
    consistent: bool


def zariski_condition_check(eq: CurveEquation, precision: int = 256) -> ZariskiReport:
    """Verify on one curve that the smallest gap value with nonzero
    coefficient, the Delorme-computed lambda_1, and the residue chain at test
    exponent (1,1) all tell the same story, then confirm the guaranteed
    nonzero residues across (lambda_1 + Gamma) \\ Gamma."""
    if eq.form != "nice":
        raise ValueError("the coefficient pattern is read off the nice form")
    sg = eq.sg
    n, m = sg.n, sg.m
    z = {j: c for j, c in eq.nice_coeffs.items() if c}
    j1 = min(z) if z else None

    basis = delorme(eq).values.lambdas
    lambda1 = basis[2] if len(basis) > 2 else None

    chain = []
    residue_j1 = None
    for ell in sorted(eq.sets.J):
        decision = residue_is_zero(residue(eq, (1, 1), Rat(ell + n + m, n * m)),
                                   precision)
        chain.append((ell, decision.value))
        if decision is not ResidueDecision.ZERO:
            residue_j1 = ell
            break

    consistent = (j1 == residue_j1
                  and (lambda1 is None) == (j1 is None)
                  and (j1 is None or lambda1 == j1 + n + m))

    dagger = []
    if lambda1 is not None:
        for lam in range(lambda1, sg.conductor):
            if (lam - lambda1) not in sg or lam in sg:
                continue
            a, b = sg.decompose(lam - lambda1)
            decision = residue_is_zero(
                residue(eq, (a + 1, b + 1), Rat(lam, n * m)), precision)
            dagger.append((lam, (a + 1, b + 1), decision.value))
            if decision is ResidueDecision.ZERO:
                consistent = False
    return ZariskiReport(j1, lambda1, residue_j1, tuple(chain), tuple(dagger),
                         consistent)


@dataclass(frozen=True)
class FourReport:
    """Cross-check of the second extension step for n = 4 curves whose
    lambda_1 has the two-step shape 4(alpha+1) + 2 epsilon + 4 q."""

    alpha: int
    epsilon: int
    q: int
    q_prime_coeffs: int | None
    q_prime_delorme: int | None
    chain: tuple    # ((gamma, decision value), ...)
    dagger: tuple   # ((lam, (a, b), decision value), ...)
    consistent: bool


def four_condition_check(eq: CurveEquation, precision: int = 256) -> FourReport:
    """For n = 4: predict the second extension value lambda_2 = 8 alpha +
    3 epsilon + 4 q' from the coefficient pattern (simple vanishing tests
    below q, a quadratic combination at q), compare against Delorme's
    output, and verify the residue chain plus the guaranteed nonzero
    residues above lambda_2."""
    if eq.form != "nice":
        raise ValueError("the coefficient pattern is read off the nice form")
    sg = eq.sg
    n, m = sg.n, sg.m
    if n != 4:
        raise PreconditionViolation("this battery is specific to n = 4")
    alpha, epsilon = m // 4, m % 4

    basis = delorme(eq).values.lambdas
    if len(basis) < 3:
        raise PreconditionViolation("the Zariski invariant vanishes (s = 0)")
    lambda1 = basis[2]
    q4 = lambda1 - 4 * (alpha + 1) - 2 * epsilon
    if q4 < 0 or q4 % 4:
        raise PreconditionViolation(
            f"lambda_1 = {lambda1} is not of the form 4(alpha+1)+2 epsilon+4q")
    q = q4 // 4
    if alpha < 2 or q > alpha - 2:
        raise PreconditionViolation(f"q = {q} outside [0, alpha-2]")

    z = eq.nice_coeffs
    q_prime_coeffs = None
    for gamma in range(q + 1):
        if gamma < q:
            if rat(z.get(2 * epsilon + 4 * (q + gamma), 0)):
                q_prime_coeffs = gamma
                break
        else:
            quad = (2 * (4 * alpha + epsilon) * rat(z.get(2 * epsilon + 8 * q, 0))
                    - (3 * alpha + epsilon + q) * rat(z.get(epsilon + 4 * q, 0)) ** 2)
            if quad:
                q_prime_coeffs = gamma

    cls = classify_four(AbstractSemimodule(sg, basis))
    if cls.case == 3:
        if cls.q != q:
            raise AssertionError("classification and lambda_1 disagree on q")
        q_prime_delorme = cls.q_prime
    else:
        q_prime_delorme = None

    top = q_prime_delorme if q_prime_delorme is not None else q
    chain = []
    chain_ok = True
    for gamma in range(top + 1):
        decision = residue_is_zero(
            residue(eq, (alpha - q, 1), Rat(8 * alpha + 3 * epsilon + 4 * gamma, n * m)),
            precision)
        chain.append((gamma, decision.value))
        expected_zero = q_prime_delorme is None or gamma < q_prime_delorme
        if (decision is ResidueDecision.ZERO) != expected_zero:
            chain_ok = False

    dagger = []
    dagger_ok = True
    if q_prime_delorme is not None:
        lambda2 = basis[3]
        sub = AbstractSemimodule(sg, basis[:3])
        for a in range(q - q_prime_delorme + 1):
            lam = lambda2 + 4 * a
            if lam in sub:
                raise AssertionError(f"{lam} unexpectedly lies in the sub-semimodule")
            decision = residue_is_zero(
                residue(eq, (alpha - q + a, 1), Rat(lam, n * m)), precision)
            dagger.append((lam, (alpha - q + a, 1), decision.value))
            if decision is ResidueDecision.ZERO:
                dagger_ok = False

    consistent = q_prime_coeffs == q_prime_delorme and chain_ok and dagger_ok
    return FourReport(alpha, epsilon, q, q_prime_coeffs, q_prime_delorme,
                      tuple(chain), tuple(dagger), consistent)
