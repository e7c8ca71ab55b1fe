"""Classical q-series as truncated Laurent series, and their identities.

Everything here lives over the bivariate registry ``("q", "p")`` with grading
weights ``(1, 0)`` — truncation is by q-order alone, and the elliptic
variable ``p`` ranges over a finite window at each q-order.  Fractional
prefactors (``q^{1/8}``, ``p^{-1/2}``, ``q^{1/24}``, powers of ``i``) are
never stored in a series; they ride along in a :class:`PrefactorLedger` and
must cancel before a result is exposed.

The module provides

* the reduced Dedekind eta product ``etatilde = prod (1 - q^m)``,
* the reduced Jacobi theta product
  ``thetatilde = prod (1 - q^m)(1 - q^{m-1} p)(1 - q^m p^{-1})``,
* the weight -2 index 1 weak Jacobi form
  ``phi(q, p) = p^{-1}(1-p)^2 prod ((1-q^m p^{-1})^2 (1-q^m p)^2 / (1-q^m)^4)``,
* the equivariant elliptic genus of the plane,
  ``Ell(q, y, t) = sqrt(phi(q, yt) phi(q, y^{-1} t)) / phi(q, t)``,
* an identity suite checking the prefactor-free forms of the classical
  relations between these functions.

Substituted instances (``q -> Q``, ``p -> monomial``) are produced by the
``*_at`` builders, which pick the source q-order automatically from the
support-width certificates so the result is exact to the requested order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .series import (
    ExponentVector,
    PrefactorLedger,
    PWidthBound,
    TruncatedSeries,
    VariableRegistry,
    monomial,
    one,
    polynomial,
    required_source_order,
)

__all__ = [
    "QP",
    "Q_ONLY",
    "PHI_P_WIDTH",
    "THETA_P_WIDTH",
    "ReducedEta",
    "ReducedTheta",
    "IdentityCheck",
    "eta_reduced",
    "theta1_reduced",
    "jacobi_phi",
    "eta_at",
    "theta1_at",
    "jacobi_phi_at",
    "elliptic_genus_c2",
    "elliptic_genus_c2_at",
    "check_identities",
]

#: Bivariate home of the classical series: q carries the grading, p does not.
QP = VariableRegistry(("q", "p"), (1, 0))

#: Univariate registry for eta-like products.
Q_ONLY = VariableRegistry(("q",))


# The theta product reaches p-exponent k at q-order a only by selecting k
# distinct factors: descending needs distinct m >= 1 with sum <= a (cost
# k(k+1)/2), ascending needs distinct m with sum of (m-1) <= a (cost
# k(k-1)/2).  Both give |k| <= isqrt(2a) + 1; the crude bound a + 1 is
# sharper for small a.
THETA_P_WIDTH = PWidthBound(
    fn=lambda a: min(a + 1, isqrt(2 * a) + 2), sqrt_coeff=1, sqrt_arg=2, offset=2
)

# phi's factors appear squared, so each m is usable twice: reaching
# p-exponent -j costs t(t+1) for j = 2t and (t+1)^2 for j = 2t+1 in q-order,
# hence j <= 2*sqrt(a); adding the fixed p^{-1} (and (1-p)^2 on the
# ascending side) gives |p-exponent| <= 2*isqrt(a) + 3, again capped by the
# corner bound a + 1.
PHI_P_WIDTH = PWidthBound(
    fn=lambda a: min(a + 1, 2 * isqrt(a) + 3), sqrt_coeff=2, sqrt_arg=1, offset=3
)


@dataclass(frozen=True)
class ReducedEta:
    """Eta product with its ``q^{1/24}`` prefactor held in the ledger."""

    series: TruncatedSeries
    ledger: PrefactorLedger


@dataclass(frozen=True)
class ReducedTheta:
    """Theta product with its ``i q^{1/8} p^{-1/2}`` prefactor in the ledger."""

    series: TruncatedSeries
    ledger: PrefactorLedger


def _one_minus(registry: VariableRegistry, exps: ExponentVector, order: int) -> TruncatedSeries:
    return polynomial(registry, {registry.zero_exps(): 1, exps: -1}, order)


def eta_reduced(N: int) -> ReducedEta:
    """``prod_{m=1}^{N} (1 - q^m)`` exact to q-order N; ledger ``q^{1/24}``."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    acc = one(Q_ONLY, N)
    for m in range(1, N + 1):
        acc = acc * _one_minus(Q_ONLY, (m,), N)
    return ReducedEta(acc, PrefactorLedger(q_exp=Fraction(1, 24)))


def theta1_reduced(N: int) -> ReducedTheta:
    """``prod (1-q^m)(1-q^{m-1}p)(1-q^m p^{-1})`` exact to q-order N.

    The ledger carries the ``i q^{1/8} p^{-1/2}`` prefactor that turns this
    into the odd Jacobi theta function.
    """
    if N < 0:
        raise ValueError("order must be nonnegative")
    acc = one(QP, N)
    for m in range(1, N + 2):
        if m <= N:
            acc = acc * _one_minus(QP, (m, 0), N)
            acc = acc * _one_minus(QP, (m, -1), N)
        acc = acc * _one_minus(QP, (m - 1, 1), N)
    ledger = PrefactorLedger(
        i_power=3, q_exp=Fraction(1, 8), var_exps=(("p", Fraction(-1, 2)),)
    )
    return ReducedTheta(acc, ledger)


def jacobi_phi(N: int) -> TruncatedSeries:
    """The weight -2, index 1 weak Jacobi form as an honest integer series.

    ``phi(q,p) = p^{-1}(1-p)^2 prod_m (1-q^m p^{-1})^2 (1-q^m p)^2 (1-q^m)^{-4}``
    exact to q-order N.  No ledger: the prefactors of the theta/eta
    presentation cancel completely in this combination.
    """
    if N < 0:
        raise ValueError("order must be nonnegative")
    acc = polynomial(QP, {(0, -1): 1, (0, 0): -2, (0, 1): 1}, N)  # p^{-1}(1-p)^2
    eta_like = one(QP, N)
    for m in range(1, N + 1):
        f = _one_minus(QP, (m, -1), N)
        g = _one_minus(QP, (m, 1), N)
        acc = acc * f * f * g * g
        eta_like = eta_like * _one_minus(QP, (m, 0), N)
    inv = eta_like.invert_unit()
    return acc * inv * inv * inv * inv


def eta_at(target: VariableRegistry, q_image: ExponentVector, order: int) -> ReducedEta:
    """Eta product with ``q`` sent to a positive-degree target monomial."""
    dq = target.degree(q_image)
    if dq < 1:
        raise ValueError("the modular variable must map to a monomial of positive degree")
    M = (order + 1 + dq - 1) // dq  # smallest M with (M + 1) * dq - 1 >= order
    base = eta_reduced(M).series
    series = base.substitute_monomials(
        target, {"q": (1, q_image)}, nonnegative_source=True
    )
    return ReducedEta(series, PrefactorLedger(q_exp=Fraction(1, 24)))


def _ledger_for_p_image(i_power: int, target: VariableRegistry, p_image: ExponentVector) -> PrefactorLedger:
    # p^{-1/2} with p -> monomial(exps) contributes -e/2 per target variable;
    # the q^{1/8} slot is tracked in units of the shared modular monomial.
    var_exps = tuple(
        (name, Fraction(-e, 2)) for name, e in zip(target.names, p_image) if e
    )
    return PrefactorLedger(i_power=i_power, q_exp=Fraction(1, 8), var_exps=var_exps)


def theta1_at(
    target: VariableRegistry,
    q_image: ExponentVector,
    p_image: ExponentVector,
    order: int,
) -> ReducedTheta:
    """Theta product with ``q -> Q`` and ``p -> monomial``, exact to ``order``.

    The source q-order is chosen from the theta support-width certificate;
    the returned ledger records the substituted ``i Q^{1/8} (p-image)^{-1/2}``.
    """
    dq = target.degree(q_image)
    dp = target.degree(p_image)
    M = required_source_order(THETA_P_WIDTH, dq, abs(dp), order)
    base = theta1_reduced(M).series
    series = base.substitute_monomials(
        target,
        {"q": (1, q_image), "p": (1, p_image)},
        p_width=THETA_P_WIDTH,
    )
    return ReducedTheta(series, _ledger_for_p_image(3, target, p_image))


def jacobi_phi_at(
    target: VariableRegistry,
    q_image: ExponentVector,
    p_image: ExponentVector,
    order: int,
) -> TruncatedSeries:
    """``phi(Q, monomial)`` exact to ``order`` in the target grading."""
    dq = target.degree(q_image)
    dp = target.degree(p_image)
    M = required_source_order(PHI_P_WIDTH, dq, abs(dp), order)
    base = jacobi_phi(M)
    return base.substitute_monomials(
        target,
        {"q": (1, q_image), "p": (1, p_image)},
        p_width=PHI_P_WIDTH,
    )


def elliptic_genus_c2_at(
    target: VariableRegistry,
    q_image: ExponentVector,
    y_image: ExponentVector,
    t_image: ExponentVector,
    order: int,
) -> TruncatedSeries:
    """Equivariant elliptic genus of the plane with its three slots mapped to
    target monomials: ``sqrt(phi(Q, YT) phi(Q, Y^{-1}T)) / phi(Q, T)``.

    Each phi instance is built by certified substitution; the square root and
    inverse check their own preconditions.  Source orders start at a small
    pad over ``order`` and grow until the propagated result order provably
    reaches ``order`` (the first pad suffices for every in-repo use; the loop
    is a guard, not a tuning knob).
    """
    yt = tuple(a + b for a, b in zip(y_image, t_image))
    ymt = tuple(b - a for a, b in zip(y_image, t_image))
    pad = 2 + 2 * abs(target.degree(t_image)) + abs(target.degree(y_image))
    for _ in range(6):
        a = jacobi_phi_at(target, q_image, yt, order + pad)
        b = jacobi_phi_at(target, q_image, ymt, order + pad)
        d = jacobi_phi_at(target, q_image, t_image, order + pad)
        result = (a * b).sqrt_unit() * d.invert_unit()
        if result.order >= order:
            return result.truncate(order)
        pad *= 2
    raise ValueError("could not reach the requested order; image degrees too degenerate")


#: Trivariate home of the elliptic genus: q-order counts double so that the
#: y/t window at each q-order is finite and symmetric.
QYT = VariableRegistry(("q", "y", "t"), (2, 1, 1))


def elliptic_genus_c2(N: int) -> TruncatedSeries:
    """The elliptic genus over ``("q","y","t")`` with weights ``(2,1,1)``,
    exact to weighted order 2N (so complete through q-order N)."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    return elliptic_genus_c2_at(QYT, (1, 0, 0), (0, 1, 0), (0, 0, 1), 2 * N)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    detail: str = ""


def _report(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries, up_to: int) -> IdentityCheck:
    ok = lhs.same_series(rhs, up_to=up_to)
    detail = f"exact to order {up_to}" if ok else "series differ"
    return IdentityCheck(name, ok, detail)


def check_identities(N: int) -> list[IdentityCheck]:
    """Verify the classical relations between eta, theta and phi, in
    prefactor-free form, as exact series identities to q-order N.

    * ``eta^6 * phi(q,p) = p^{-1} * theta(q,p)^2``
    * ``p * phi(q,p) = (q/p) * phi(q, q p^{-1})``  (index-1 elliptic shift)
    * ``phi(q,p) = phi(q, p^{-1})``
    * ``theta(q, p^{-1}) = -p^{-1} * theta(q,p)``

    Failures are reported, not raised.
    """
    if N < 1:
        raise ValueError("order must be at least 1")
    phi = jacobi_phi(N)
    theta = theta1_reduced(N).series
    eta6 = eta_reduced(N).series.substitute_monomials(QP, {"q": (1, (1, 0))}) ** 6

    lhs1 = eta6 * phi
    rhs1 = (theta * theta).shift_monomial((0, -1))
    check1 = _report("eta6_phi_equals_theta_squared", lhs1, rhs1, N)

    M = required_source_order(PHI_P_WIDTH, 1, 1, N)
    shifted = jacobi_phi(M).substitute_monomials(
        QP, {"q": (1, (1, 0)), "p": (1, (1, -1))}, p_width=PHI_P_WIDTH
    )
    lhs2 = phi.shift_monomial((0, 1))
    rhs2 = shifted.shift_monomial((1, -1))
    check2 = _report("index_one_shift", lhs2, rhs2, N)

    flipped = phi.substitute_monomials(QP, {"q": (1, (1, 0)), "p": (1, (0, -1))})
    check3 = _report("p_inversion_symmetry", phi, flipped, N)

    theta_flipped = theta.substitute_monomials(QP, {"q": (1, (1, 0)), "p": (1, (0, -1))})
    rhs4 = theta.shift_monomial((0, -1), -1)
    check4 = _report("theta_oddness", theta_flipped, rhs4, N)

    return [check1, check2, check3, check4]
