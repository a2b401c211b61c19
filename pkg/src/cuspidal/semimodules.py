"""Combinatorics of Gamma-semimodules over a cusp semigroup <n, m>.

A semimodule is described by its basis (lambda_{-1}, lambda_0, ..., lambda_s):
the unique minimal increasing sequence whose shifted copies of the semigroup
cover the whole value set.  This module knows nothing about curves; it
normalizes bases, computes axes and critical values, enumerates every
increasing semimodule of a given semigroup, and classifies the n = 4 family.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .curve import Semigroup


class Unclassifiable(ValueError):
    """A basis that fits none of the n = 4 shapes; upstream enumeration bug."""


def validate_basis(sg: Semigroup, basis) -> tuple:
    """Check the cuspidal-basis invariants and return the basis as a tuple.

    Required: the sequence starts (n, m), is strictly increasing, has at most
    n elements (s <= n - 2), every later element is a gap of the semigroup,
    and no element lies in the semimodule spanned by its predecessors.
    """
    basis = tuple(int(b) for b in basis)
    if len(basis) < 2 or basis[0] != sg.n or basis[1] != sg.m:
        raise ValueError(f"basis must start with ({sg.n}, {sg.m}), got {basis}")
    if len(basis) > sg.n:
        raise ValueError(f"basis length {len(basis)} exceeds n = {sg.n} (s <= n-2)")
    for i in range(1, len(basis)):
        if basis[i] <= basis[i - 1]:
            raise ValueError(f"basis not strictly increasing: {basis}")
    for i in range(2, len(basis)):
        lam = basis[i]
        if lam in sg:
            raise ValueError(f"basis element {lam} lies in the semigroup")
        if any((lam - prev) in sg for prev in basis[:i]):
            raise ValueError(f"basis element {lam} is spanned by earlier elements")
    return basis


@dataclass(frozen=True)
class AbstractSemimodule:
    """A cuspidal Gamma-semimodule given by its basis alone."""

    sg: Semigroup
    basis: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "basis", validate_basis(self.sg, self.basis))

    @property
    def s(self) -> int:
        return len(self.basis) - 2

    def __contains__(self, k: int) -> bool:
        return any((k - lam) in self.sg for lam in self.basis)

    def contains(self, k: int, level: int | None = None) -> bool:
        """Membership in Lambda_level (level = index i, -1-based); full
        semimodule when level is None."""
        top = len(self.basis) if level is None else level + 2
        return any((k - lam) in self.sg for lam in self.basis[:top])


def membership(sm: AbstractSemimodule, k: int) -> bool:
    return k in sm


def _axis(sg: Semigroup, basis, i: int) -> int:
    """u_i = min((lambda_{i-1} + Gamma) intersect Lambda_{i-2}) for i >= 1."""
    lam_prev = basis[i]          # lambda_{i-1} sits at list index i
    lower = basis[:i]            # the basis of Lambda_{i-2}
    bound = lam_prev + sg.conductor + sg.n + 1
    for k in range(lam_prev, bound + 1):
        if (k - lam_prev) in sg and any((k - lam) in sg for lam in lower):
            return k
    raise AssertionError(f"axis u_{i} not found below {bound}")


def axes_and_criticals(sm: AbstractSemimodule) -> tuple:
    """The axes (u_1, ..., u_{s+1}) and critical values (t_{-1}, ..., t_{s+1}).

    Axes come from direct search; critical values from t_{-1} = n, t_0 = m and
    the recursion t_i = t_{i-1} + u_i - lambda_{i-1}.  (The recursion is
    calibrated so that t_i equals the monomial value of the i-th basis 1-form;
    in particular u_1 = t_1 = n + m always.)
    """
    sg, basis = sm.sg, sm.basis
    axes = tuple(_axis(sg, basis, i) for i in range(1, len(basis)))
    crit = [sg.n, sg.m]
    for i, u in enumerate(axes, start=1):
        crit.append(crit[-1] + u - basis[i])
    return axes, tuple(crit)


def enumerate_increasing(sg: Semigroup):
    """All increasing cuspidal semimodules of <n, m>, i.e. every basis with
    lambda_i > u_i at each extension step.  Depth-first: at each node the next
    element ranges over the semigroup gaps above the fresh axis that are not
    already covered; stopping is always allowed."""
    gaps = sg.gaps()
    found: list[AbstractSemimodule] = []

    def extend(basis: tuple) -> None:
        found.append(AbstractSemimodule(sg, basis))
        if len(basis) >= sg.n:  # s = n - 2 reached
            return
        u_next = _axis(sg, basis, len(basis) - 1)
        for lam in gaps:
            if lam <= u_next:
                continue
            if any((lam - prev) in sg for prev in basis):
                continue
            extend(basis + (lam,))

    extend((sg.n, sg.m))
    return found


@dataclass(frozen=True)
class FourClassification:
    """Shape of an n = 4 semimodule basis: m = 4*alpha + epsilon with epsilon
    in {1, 3}; case 1 is (4, m); case 2 is (4, m, lambda_1) with a free gap
    lambda_1; case 3 is (4, m, 4(alpha+1) + 2*epsilon + 4q, 8*alpha +
    3*epsilon + 4q') with 0 <= q' <= q <= alpha - 2."""

    case: int
    alpha: int
    epsilon: int
    q: int | None = None
    q_prime: int | None = None


def classify_four(sm: AbstractSemimodule) -> FourClassification:
    sg = sm.sg
    if sg.n != 4:
        raise Unclassifiable(f"classification requires n = 4, got n = {sg.n}")
    alpha, epsilon = divmod(sg.m, 4)
    if sm.s == 0:
        return FourClassification(1, alpha, epsilon)
    if sm.s == 1:
        return FourClassification(2, alpha, epsilon)
    if sm.s == 2:
        lam1, lam2 = sm.basis[2], sm.basis[3]
        q4 = lam1 - 4 * (alpha + 1) - 2 * epsilon
        qp4 = lam2 - 8 * alpha - 3 * epsilon
        if q4 >= 0 and q4 % 4 == 0 and qp4 >= 0 and qp4 % 4 == 0:
            q, q_prime = q4 // 4, qp4 // 4
            if alpha >= 2 and q <= alpha - 2 and q_prime <= q:
                return FourClassification(3, alpha, epsilon, q, q_prime)
        raise Unclassifiable(f"basis {sm.basis} fits no n = 4 shape")
    raise Unclassifiable(f"basis {sm.basis} has s = {sm.s} > 2 with n = 4")


def elements_outside(sm: AbstractSemimodule, sub_level: int) -> tuple:
    """Sorted finite set Lambda \\ Lambda_{sub_level}; sub_level ranges over
    -1..s.  (Lambda \\ Gamma is the sub_level = 0 instance, since Lambda_0 is
    the semigroup minus 0.)  Every element is below n + conductor."""
    if not (-1 <= sub_level <= sm.s):
        raise ValueError(f"sub_level {sub_level} outside -1..{sm.s}")
    bound = sm.sg.n + sm.sg.conductor
    return tuple(k for k in range(bound)
                 if sm.contains(k) and not sm.contains(k, sub_level))
