"""Closed-form genus-0 invariant generating functions for banana shapes.

For the ``(2, 2)`` configuration the generating function over classes with
B-degree 1 is

    pf = 2 * sqrt( phi(Q,r0) phi(Q,s0) phi(Q,r1) phi(Q,s1)
                   / ( phi(Q, r0 s0) phi(Q, r1 s1) ) ),        Q = r0 r1 s0 s1,

with phi the weight -2 index 1 weak Jacobi form.  ``pf_22`` assembles this
directly (the ratio has constant leading term, so the square root is
branch-free); ``pf_22_theta`` recomputes it from theta quotients,

    pf = +-2 * eta(Q)^{-6} * theta(Q,r0) theta(Q,s0) theta(Q,r1) theta(Q,s1)
              / ( theta(Q, r0 s0) theta(Q, r1 s1) ),

where the fractional prefactors cancel in the ledger up to the scalar -1
(phi = -theta^2/eta^6) and the square-root branch is fixed by the constant
term +2 — one contribution per B location.

For ``(1, w)`` the function is a sum over the w locations of products of
equivariant elliptic genus factors,

    pf = s * phi(Q, s) * sum_i prod_{k=i}^{i+w-2} Ell(Q, s, R_{i,k}),

with ``Q = prod_i (r_i s)`` and ``R_{i,k} = r_i r_{i+1} ... r_k s^{k-i+1}``
(indices mod w).  At w = 1 the product is empty and pf reduces to
``s * phi(Q, s)``, the single-banana answer.

``cross_check`` compares any of these against the sign-twisted enumerative
route from :mod:`bananagv.oracle`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .geometry import BananaShape, CurveClass, registry_for
from .oracle import behrend_twist, naive_pf
from .qseries import elliptic_genus_c2_at, eta_at, jacobi_phi_at, theta1_at
from .series import ExponentVector, TruncatedSeries, VariableRegistry, grlex_key, one

__all__ = [
    "GVTable",
    "CrossCheckReport",
    "pf_22",
    "pf_22_theta",
    "pf_1w",
    "pf_for_shape",
    "cross_check",
    "gv_table",
]

R22 = VariableRegistry(("r0", "r1", "s0", "s1"))
_Q22 = (1, 1, 1, 1)


def _assert_nonnegative_orthant(series: TruncatedSeries, what: str):
    for exps in series.terms:
        if any(e < 0 for e in exps):
            raise AssertionError(f"{what} kept a negative exponent at {exps}")


def pf_22(N: int) -> TruncatedSeries:
    """Closed-form generating function of the 2x2 shape, exact to total
    degree N over (r0, r1, s0, s1)."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    K = N + 2
    reg = R22
    ratio = one(reg, K)
    for single in ("r0", "s0", "r1", "s1"):
        ratio = ratio * jacobi_phi_at(reg, _Q22, reg.exps(**{single: 1}), K)
    for pair in ((1, 0, 1, 0), (0, 1, 0, 1)):  # r0 s0 and r1 s1
        ratio = ratio * jacobi_phi_at(reg, _Q22, pair, K).invert_unit()
    pf = 2 * ratio.sqrt_unit()
    if pf.order < N:
        raise AssertionError("order propagation fell short; widen the pad")
    pf = pf.truncate(N)
    _assert_nonnegative_orthant(pf, "pf_22")
    return pf


def pf_22_theta(N: int) -> TruncatedSeries:
    """The same function assembled from theta quotients.

    The series part is ``eta^{-6} * (four thetas) / (two thetas)``; the
    ledger of fractional prefactors must cancel to the scalar -1 (this is
    ``phi = -theta^2 / eta^6`` applied six times), and the square-root
    branch is fixed by requiring constant term +2.  A residual fractional
    ledger or a wrong constant term raises, signalling a broken convention.
    """
    if N < 0:
        raise ValueError("order must be nonnegative")
    reg = R22
    eta = eta_at(reg, _Q22, N)
    ledger = eta.ledger.scale(-6)
    series = eta.series.invert_unit() ** 6
    for single in ("r0", "s0", "r1", "s1"):
        th = theta1_at(reg, _Q22, reg.exps(**{single: 1}), N)
        series = series * th.series
        ledger = ledger.combine(th.ledger)
    for pair in ((1, 0, 1, 0), (0, 1, 0, 1)):
        th = theta1_at(reg, _Q22, pair, N)
        series = series * th.series.invert_unit()
        ledger = ledger.combine(th.ledger.scale(-1))
    if not ledger.is_scalar():
        raise AssertionError(f"theta-route prefactors failed to cancel: {ledger}")
    branch = -1  # sqrt branch: the location count fixes the sign of the total
    pf = (2 * branch * ledger.scalar_sign()) * series
    if pf.constant_term() != 2:
        raise AssertionError("theta-route constant term is not the location count")
    return pf.truncate(N)


def _pf_1w_registry(w: int) -> VariableRegistry:
    return registry_for(BananaShape(1, w))


def pf_1w(w: int, N: int) -> TruncatedSeries:
    """Closed-form generating function of the 1xw shape, exact to total
    degree N over (r0, ..., r_{w-1}, s)."""
    if w < 1:
        raise ValueError("w must be at least 1")
    if N < 0:
        raise ValueError("order must be nonnegative")
    reg = _pf_1w_registry(w)
    q_img = (1,) * w + (w,)
    s_img = reg.exps(s=1)
    base = jacobi_phi_at(reg, q_img, s_img, N + 1).shift_monomial(s_img)
    total = None
    for i in range(w):
        contribution = one(reg, base.order)
        for k in range(i, i + w - 1):
            r_span = [0] * (w + 1)
            for j in range(i, k + 1):
                r_span[j % w] += 1
            r_span[w] = k - i + 1
            contribution = contribution * elliptic_genus_c2_at(
                reg, q_img, s_img, tuple(r_span), N
            )
        total = contribution if total is None else total + contribution
    pf = base * total
    if pf.order < N:
        raise AssertionError("order propagation fell short; widen the pad")
    pf = pf.truncate(N)
    _assert_nonnegative_orthant(pf, "pf_1w")
    if pf.constant_term() != w:
        raise AssertionError("constant term must count the B locations")
    return pf


def pf_for_shape(shape: BananaShape, N: int) -> TruncatedSeries:
    """Dispatch to the closed form for a supported shape."""
    if (shape.v, shape.w) == (2, 2):
        return pf_22(N)
    if shape.v == 1:
        return pf_1w(shape.w, N)
    raise ValueError(f"no closed form for shape {shape}")


@dataclass(frozen=True)
class CrossCheckReport:
    """Outcome of comparing the closed form against the twisted enumeration."""

    shape: BananaShape
    order: int
    passed: bool
    first_mismatch: tuple[ExponentVector, int, int] | None = None

    def describe(self) -> str:
        if self.passed:
            return (
                f"shape {self.shape} order {self.order}: closed form matches "
                f"sign-twisted enumeration"
            )
        exps, closed, twisted = self.first_mismatch
        return (
            f"shape {self.shape} order {self.order}: mismatch at {exps}: "
            f"closed form {closed} vs twisted enumeration {twisted}"
        )


def cross_check(shape: BananaShape, N: int) -> CrossCheckReport:
    """Compare the closed form with the sign-twisted brute-force count,
    term by term up to total degree N."""
    closed = pf_for_shape(shape, N)
    twisted = behrend_twist(naive_pf(shape, N))
    keys = sorted(set(closed.terms) | set(twisted.terms), key=grlex_key)
    for exps in keys:
        a, b = closed.terms.get(exps, 0), twisted.terms.get(exps, 0)
        if a != b:
            return CrossCheckReport(shape, N, False, (exps, a, b))
    return CrossCheckReport(shape, N, True)


@dataclass(frozen=True)
class GVTable:
    """All nonzero invariants up to total degree N, as (class, value) rows
    in graded-lex order.  Every class implicitly carries B-degree 1."""

    shape: BananaShape
    order: int
    entries: tuple[tuple[CurveClass, int], ...]


def _class_from_exponents(shape: BananaShape, exps: ExponentVector) -> CurveClass:
    if shape.v == 1:
        return CurveClass(tuple(exps[: shape.w]), 1, (exps[shape.w],))
    return CurveClass(tuple(exps[:2]), 1, tuple(exps[2:]))


def gv_table(shape: BananaShape, N: int) -> GVTable:
    pf = pf_for_shape(shape, N)
    entries = tuple(
        (_class_from_exponents(shape, exps), value) for exps, value in pf.sorted_terms()
    )
    return GVTable(shape, N, entries)
