"""Sparse multivariate truncated Laurent series with exact integer coefficients.

A series is a finite dict mapping exponent vectors to Python ints together
with a truncation bound ``order``: every monomial whose weighted degree is
<= order is stored exactly, and nothing is claimed beyond that bound.  Each
registry variable carries a nonnegative integer grading weight (default 1),
so "degree" always means the weighted degree ``sum(w_i * e_i)``.  Exponents
may be negative (Laurent), weights may not.

Alongside ``order`` every series tracks ``floor``, a proven lower bound on
the weighted degree of *any* term of the underlying untruncated series.
Because stored terms are complete up to ``order``, the minimum stored degree
(or ``order + 1`` for a series with no stored terms) is such a bound.  The
two numbers drive exact order propagation:

* ``a + b``   -> order ``min(Na, Nb)``
* ``a * b``   -> order ``min(Na + Fb, Nb + Fa)``
* ``a.invert_unit()`` with minimal term of degree ``m``  -> order ``Na - 2m``
* ``a.sqrt_unit()`` with minimal slice at degree ``m``   -> order ``Na - m/2``

Monomial substitution needs more care because a weight-zero variable (the
elliptic variable ``p`` of the q-series in this package) can appear with
unbounded exponent at fixed degree.  The width-bound machinery at the bottom
of this module handles that case; see ``PWidthBound``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterator, Mapping

__all__ = [
    "ExponentVector",
    "VariableRegistry",
    "TruncatedSeries",
    "PrefactorLedger",
    "PWidthBound",
    "monomial",
    "polynomial",
    "one",
    "zero",
    "grlex_key",
    "required_source_order",
]

# An exponent vector is a plain tuple of ints, one entry per registry
# variable, in registry order.
ExponentVector = tuple


def grlex_key(exps: ExponentVector):
    """Graded-lex sort key: raw total degree first, then the tuple itself.

    This is the canonical term order used everywhere: serialization lists
    terms by increasing key, while leading-term arguments (square roots,
    exact division) take the maximal key.
    """
    return (sum(exps), exps)


@dataclass(frozen=True)
class VariableRegistry:
    """An ordered set of variable names with integer grading weights.

    Two series interoperate only if they share an equal registry.  Weights
    default to 1 for every variable; a weight of 0 marks a variable that does
    not contribute to the truncation degree (used for the elliptic variable
    of a Jacobi form, where the q-order alone bounds the truncation).
    """

    names: tuple[str, ...]
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError("registry variable names must be distinct")
        weights = self.weights
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise ValueError("one weight per variable required")
        if any(w < 0 for w in weights):
            raise ValueError("grading weights must be nonnegative")
        object.__setattr__(self, "weights", weights)

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def degree(self, exps: ExponentVector) -> int:
        if len(exps) != len(self.names):
            raise ValueError("exponent vector has wrong length")
        return sum(w * e for w, e in zip(self.weights, exps))

    def zero_exps(self) -> ExponentVector:
        return (0,) * len(self.names)

    def exps(self, **assignments: int) -> ExponentVector:
        """Build an exponent vector by variable name, e.g. ``reg.exps(r0=1, s=2)``."""
        vec = [0] * len(self.names)
        for name, e in assignments.items():
            vec[self.index(name)] = int(e)
        return tuple(vec)


class TruncatedSeries:
    """Immutable truncated Laurent series over a :class:`VariableRegistry`.

    Construction normalizes the term dict: zero coefficients and terms of
    weighted degree above ``order`` are dropped (the latter lie in the
    unknown region and may not be reported).  Do not mutate ``terms``.
    """

    __slots__ = ("registry", "terms", "order", "floor")

    def __init__(self, registry: VariableRegistry, terms: Mapping[ExponentVector, int], order: int):
        order = int(order)
        clean: dict[ExponentVector, int] = {}
        n = registry.size
        for exps, coeff in terms.items():
            if len(exps) != n:
                raise ValueError("exponent vector has wrong length")
            if coeff == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if registry.degree(exps) <= order:
                clean[exps] = int(coeff)
        object.__setattr__(self, "registry", registry)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "order", order)
        floor = min((registry.degree(e) for e in clean), default=order + 1)
        object.__setattr__(self, "floor", floor)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("TruncatedSeries is immutable")

    # -- queries ---------------------------------------------------------

    def coefficient(self, exps: ExponentVector) -> int:
        """Exact coefficient of the given monomial.

        Raises if the monomial's degree exceeds the guaranteed order: a
        coefficient in the unknown region is not zero, it is unknown.
        """
        exps = tuple(int(e) for e in exps)
        if self.registry.degree(exps) > self.order:
            raise ValueError(
                f"coefficient at degree {self.registry.degree(exps)} is beyond the "
                f"guaranteed order {self.order}"
            )
        return self.terms.get(exps, 0)

    def constant_term(self) -> int:
        return self.coefficient(self.registry.zero_exps())

    def is_zero(self) -> bool:
        return not self.terms

    def degree_slice(self, degree: int) -> dict[ExponentVector, int]:
        """All stored terms of the given weighted degree (complete if degree <= order)."""
        if degree > self.order:
            raise ValueError("slice beyond guaranteed order")
        reg = self.registry
        return {e: c for e, c in self.terms.items() if reg.degree(e) == degree}

    def sorted_terms(self) -> list[tuple[ExponentVector, int]]:
        """Terms in the canonical graded-lex order (ascending)."""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]))

    def same_series(self, other: "TruncatedSeries", up_to: int | None = None) -> bool:
        """Compare coefficients up to ``up_to`` (default: the common order)."""
        if self.registry != other.registry:
            raise ValueError("registry mismatch")
        bound = min(self.order, other.order)
        if up_to is not None:
            if up_to > bound:
                raise ValueError("comparison beyond the common guaranteed order")
            bound = up_to
        reg = self.registry
        for e, c in self.terms.items():
            if reg.degree(e) <= bound and other.terms.get(e, 0) != c:
                return False
        for e, c in other.terms.items():
            if reg.degree(e) <= bound and self.terms.get(e, 0) != c:
                return False
        return True

    # -- ring structure --------------------------------------------------

    def _check_registry(self, other: "TruncatedSeries"):
        if self.registry != other.registry:
            raise ValueError("cannot combine series over different registries")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_registry(other)
        order = min(self.order, other.order)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return TruncatedSeries(self.registry, terms, order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.registry, {e: -c for e, c in self.terms.items()}, self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(
                self.registry, {e: c * other for e, c in self.terms.items()}, self.order
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_registry(other)
        order = min(self.order + other.floor, other.order + self.floor)
        reg = self.registry
        # iterate the smaller operand on the outside
        a, b = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        acc: dict[ExponentVector, int] = {}
        b_items = list(b.terms.items())
        for ea, ca in a.terms.items():
            da = reg.degree(ea)
            if da + b.floor > order:
                continue
            for eb, cb in b_items:
                e = tuple(x + y for x, y in zip(ea, eb))
                if reg.degree(e) > order:
                    continue
                acc[e] = acc.get(e, 0) + ca * cb
        return TruncatedSeries(reg, acc, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncatedSeries":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = None
        for _ in range(n):
            out = self if out is None else out * self
        if out is None:
            return one(self.registry, self.order)
        return out

    def truncate(self, order: int) -> "TruncatedSeries":
        """Forget knowledge beyond ``order`` (which must not exceed the current order)."""
        if order > self.order:
            raise ValueError("cannot extend a series' guaranteed order by truncation")
        return TruncatedSeries(self.registry, self.terms, order)

    def shift_monomial(self, delta: ExponentVector, scale: int = 1) -> "TruncatedSeries":
        """Multiply by the exact monomial ``scale * X^delta``.

        Unlike multiplying by a single-term series, this loses no order: a
        monomial has no unknown tail, so the guaranteed order moves up by the
        monomial's degree.
        """
        delta = tuple(int(x) for x in delta)
        d = self.registry.degree(delta)
        terms = {
            tuple(x + y for x, y in zip(e, delta)): scale * c for e, c in self.terms.items()
        }
        return TruncatedSeries(self.registry, terms, self.order + d)

    # -- units: inverse and square root -----------------------------------

    def _minimal_slice(self) -> tuple[int, dict[ExponentVector, int]]:
        if not self.terms:
            raise ValueError("the zero series has no minimal term")
        m0 = self.floor
        return m0, self.degree_slice(m0)

    def invert_unit(self) -> "TruncatedSeries":
        """Inverse of a series whose minimal-degree slice is a single monomial
        with coefficient +-1.

        The result is exact to order ``N - 2*m`` where ``m`` is the degree of
        the minimal term (so a negative ``m`` improves the order).
        """
        m0, lead = self._minimal_slice()
        if len(lead) != 1:
            raise ValueError("invert_unit requires a unique minimal-degree term")
        (e0, c0), = lead.items()
        if c0 not in (1, -1):
            raise ValueError("invert_unit requires the minimal term to have coefficient +-1")
        neg_e0 = tuple(-x for x in e0)
        u = self.shift_monomial(neg_e0, c0)  # order N - m0, leading term 1 at degree 0
        g = one(self.registry, u.order) - u  # floor >= 1 unless zero
        if not g.is_zero() and g.floor <= 0:
            raise ValueError("invert_unit internal error: tail not of positive degree")
        acc = one(self.registry, u.order)
        p = g
        while not p.is_zero():
            acc = acc + p
            # powers of the tail gain order as fast as they gain floor, so
            # cut each one back to the unit's order to make floor overtake it
            p = (p * g).truncate(u.order)
        return acc.shift_monomial(neg_e0, c0)

    def sqrt_unit(self) -> "TruncatedSeries":
        """Square root of a series whose minimal-degree slice is a perfect square.

        The minimal slice may be a single monomial (even exponents, coefficient
        a positive perfect square) or a homogeneous polynomial that is the
        square of another; the root's leading coefficient is normalized to be
        positive.  Integrality is enforced degree by degree, and the result is
        exact to order ``N - m/2`` for minimal degree ``m``.
        """
        m0, lead = self._minimal_slice()
        if m0 > self.order:
            raise ValueError("series has no guaranteed terms to take a root of")
        if m0 % 2 != 0:
            raise ValueError("minimal degree is odd; the series is not a square")
        root_lead = _homogeneous_sqrt(lead)
        reg = self.registry
        half = m0 // 2
        result_order = self.order - half
        b_terms: dict[ExponentVector, int] = dict(root_lead)
        two_lead = {e: 2 * c for e, c in root_lead.items()}
        for j in range(1, self.order - m0 + 1):
            b = TruncatedSeries(reg, b_terms, result_order)
            residue = self - b * b
            target = residue.degree_slice(m0 + j)
            if not target:
                continue
            correction = _homogeneous_exact_divide(target, two_lead)
            for e, c in correction.items():
                b_terms[e] = b_terms.get(e, 0) + c
        b = TruncatedSeries(reg, b_terms, result_order)
        check = b * b
        if not check.same_series(self, up_to=min(check.order, self.order)):
            raise ValueError("series is not the square of a truncated Laurent series")
        return b

    # -- substitution ------------------------------------------------------

    def substitute_monomials(
        self,
        target: VariableRegistry,
        images: Mapping[str, tuple[int, ExponentVector]],
        *,
        p_width: "PWidthBound | None" = None,
        nonnegative_source: bool = False,
    ) -> "TruncatedSeries":
        """Ring homomorphism sending each variable to a signed target monomial.

        ``images`` maps every source variable name to ``(sign, exponents)``
        with ``sign`` in ``{+1, -1}``; a term's coefficient picks up
        ``prod(sign_v ** e_v)``.  The result order is derived from one of
        three completeness arguments, tried in order:

        1. *Degree preserving*: every image has the same weighted degree as
           its variable's weight.  The order carries over unchanged.
        2. *Width bounded* (``p_width`` given): the source registry must be
           ``(q, p)`` with weights ``(wq >= 1, 0)`` and ``p_width`` a valid
           bound on ``|p|``-exponents of the *untruncated* series at each
           q-order.  With image degrees ``dq >= 1`` and ``dp``, terms beyond
           the source order ``M`` land at degree at least
           ``min_{a > M} (a*dq - p_width(a)*|dp|)``.
        3. *Nonnegative support* (``nonnegative_source=True``, a promise
           about the untruncated series): with every image degree >= 1 the
           result is exact to ``(M + 1) * min_image_degree - 1``.

        If no argument applies, no positive result order can be guaranteed
        and a ValueError is raised.
        """
        reg = self.registry
        if set(images) != set(reg.names):
            raise ValueError("images must cover exactly the source variables")
        img_exps = []
        img_signs = []
        img_degs = []
        for name in reg.names:
            sign, exps = images[name]
            if sign not in (1, -1):
                raise ValueError("image sign must be +1 or -1")
            exps = tuple(int(e) for e in exps)
            if len(exps) != target.size:
                raise ValueError("image exponent vector has wrong length for target registry")
            img_exps.append(exps)
            img_signs.append(sign)
            img_degs.append(target.degree(exps))

        if all(d == w for d, w in zip(img_degs, reg.weights)):
            result_order = self.order
        elif p_width is not None:
            if reg.size != 2 or reg.weights[0] < 1 or reg.weights[1] != 0:
                raise ValueError(
                    "width-bounded substitution needs a (q, p) source registry "
                    "with weights (>=1, 0)"
                )
            dq, dp = img_degs
            if dq < 1:
                raise ValueError("the grading variable must map to a monomial of degree >= 1")
            wq = reg.weights[0]
            for (a, b) in self.terms:
                if a < 0:
                    raise ValueError("width-bounded substitution expects nonnegative q-exponents")
                if abs(b) > p_width.fn(a):
                    raise ValueError("stored support violates the declared width bound")
            source_q_order = self.order // wq
            result_order = _tail_min_image_degree(p_width, dq, abs(dp), source_q_order + 1) - 1
        elif nonnegative_source:
            if any(e < 0 for exps in self.terms for e in exps):
                raise ValueError("source series has stored negative exponents")
            if min(img_degs, default=1) < 1:
                raise ValueError("every image monomial must have degree >= 1")
            if any(w < 1 for w in reg.weights):
                raise ValueError("nonnegative-support substitution needs positive weights")
            result_order = (self.order + 1) * min(img_degs, default=1) - 1
        else:
            raise ValueError(
                "cannot guarantee any result order for this substitution; "
                "pass p_width or assert nonnegative_source"
            )

        acc: dict[ExponentVector, int] = {}
        for exps, coeff in self.terms.items():
            out = [0] * target.size
            sign = 1
            for e, ie, s in zip(exps, img_exps, img_signs):
                if e:
                    for k, x in enumerate(ie):
                        out[k] += e * x
                    if s < 0 and e % 2:
                        sign = -sign
            key = tuple(out)
            if target.degree(key) <= result_order:
                acc[key] = acc.get(key, 0) + sign * coeff
        return TruncatedSeries(target, acc, result_order)

    # -- presentation ------------------------------------------------------

    def _format_term(self, exps: ExponentVector, coeff: int) -> str:
        parts = []
        for name, e in zip(self.registry.names, exps):
            if e == 0:
                continue
            parts.append(name if e == 1 else f"{name}^{e}")
        if not parts:
            return str(coeff)
        body = "*".join(parts)
        if coeff == 1:
            return body
        if coeff == -1:
            return f"-{body}"
        return f"{coeff}*{body}"

    def __str__(self) -> str:
        items = self.sorted_terms()
        if not items:
            return f"0 + O(deg {self.order + 1})"
        shown = " + ".join(self._format_term(e, c) for e, c in items[:12]).replace("+ -", "- ")
        if len(items) > 12:
            shown += " + ..."
        return f"{shown} + O(deg {self.order + 1})"

    def __repr__(self) -> str:
        return (
            f"TruncatedSeries({len(self.terms)} terms, order={self.order}, "
            f"floor={self.floor}, vars={self.registry.names})"
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.registry == other.registry
            and self.order == other.order
            and self.terms == other.terms
        )

    __hash__ = None  # mutable-looking container; use same_series for math equality


# -- constructors ----------------------------------------------------------


def monomial(registry: VariableRegistry, exps: ExponentVector, coeff: int, order: int) -> TruncatedSeries:
    """Single-term series ``coeff * X^exps``, exact to the given order."""
    exps = tuple(int(e) for e in exps)
    if registry.degree(exps) > order:
        raise ValueError("order must be at least the degree of the monomial")
    return TruncatedSeries(registry, {exps: coeff}, order)


def polynomial(registry: VariableRegistry, terms: Mapping[ExponentVector, int], order: int) -> TruncatedSeries:
    """Series from explicit terms; raises if any term exceeds the order.

    Use this to build known polynomials in tests and assemblies; the plain
    constructor silently truncates instead.
    """
    for exps in terms:
        if registry.degree(tuple(exps)) > order:
            raise ValueError("polynomial term beyond the requested order")
    return TruncatedSeries(registry, terms, order)


def one(registry: VariableRegistry, order: int) -> TruncatedSeries:
    return monomial(registry, registry.zero_exps(), 1, order)


def zero(registry: VariableRegistry, order: int) -> TruncatedSeries:
    return TruncatedSeries(registry, {}, order)


# -- homogeneous-slice helpers (plain dicts, no truncation data) ------------


def _lead(terms: dict) -> ExponentVector:
    return max(terms, key=grlex_key)


_DIVISION_CAP = 10_000


def _homogeneous_sqrt(slice_terms: dict) -> dict:
    """Square root of a homogeneous polynomial slice by leading-term recursion.

    The root's leading coefficient is positive.  Raises ValueError when the
    slice is not a perfect square over the integers.
    """
    lead = _lead(slice_terms)
    c = slice_terms[lead]
    if c < 0:
        raise ValueError("leading coefficient of the minimal slice is negative")
    r = isqrt(c)
    if r * r != c or any(e % 2 for e in lead):
        raise ValueError("minimal slice is not a perfect square")
    root = {tuple(e // 2 for e in lead): r}
    root_lead = tuple(e // 2 for e in lead)
    for _ in range(_DIVISION_CAP):
        rem = dict(slice_terms)
        for e1, c1 in root.items():
            for e2, c2 in root.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                rem[key] = rem.get(key, 0) - c1 * c2
                if rem[key] == 0:
                    del rem[key]
        if not rem:
            return root
        lt = _lead(rem)
        num = rem[lt]
        if num % (2 * r):
            raise ValueError("minimal slice is not a perfect square over the integers")
        key = tuple(x - y for x, y in zip(lt, root_lead))
        if grlex_key(key) >= grlex_key(root_lead):
            raise ValueError("minimal slice is not a perfect square")
        root[key] = root.get(key, 0) + num // (2 * r)
        if root[key] == 0:
            del root[key]
    raise ValueError("square-root recursion did not terminate; slice is not a square")


def _homogeneous_exact_divide(num: dict, den: dict) -> dict:
    """Exact quotient of homogeneous slices by greedy leading-term division.

    Works over Laurent exponents; integer divisibility is enforced at every
    step and a nonzero remainder (or runaway iteration) raises ValueError.
    """
    if not den:
        raise ValueError("division by the zero slice")
    den_lead = _lead(den)
    den_c = den[den_lead]
    quot: dict = {}
    rem = dict(num)
    for _ in range(_DIVISION_CAP):
        if not rem:
            return quot
        lt = _lead(rem)
        c = rem[lt]
        if c % den_c:
            raise ValueError("slice division is not exact over the integers")
        q_exps = tuple(x - y for x, y in zip(lt, den_lead))
        q_c = c // den_c
        quot[q_exps] = quot.get(q_exps, 0) + q_c
        for e, dc in den.items():
            key = tuple(x + y for x, y in zip(q_exps, e))
            rem[key] = rem.get(key, 0) - q_c * dc
            if rem[key] == 0:
                del rem[key]
    raise ValueError("slice division did not terminate; quotient is not polynomial")


# -- prefactor bookkeeping ---------------------------------------------------


@dataclass(frozen=True)
class PrefactorLedger:
    """Exact bookkeeping for the scalar prefactors of classical q-series.

    Tracks a power of ``i`` (mod 4), a rational exponent of the modular
    variable (denominator dividing 24, from eta-like prefactors), and a
    rational exponent per tracked variable (denominator dividing 2, from
    theta-like prefactors).  Ledgers multiply by adding componentwise; a
    computation may only expose a plain series once its combined ledger has
    cancelled to a scalar, i.e. all rational exponents are exactly zero.
    """

    i_power: int = 0
    q_exp: Fraction = Fraction(0)
    var_exps: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "i_power", self.i_power % 4)
        q = Fraction(self.q_exp)
        if 24 % q.denominator:
            raise ValueError("modular-variable exponent must have denominator dividing 24")
        object.__setattr__(self, "q_exp", q)
        cleaned = []
        for name, f in self.var_exps:
            f = Fraction(f)
            if 2 % f.denominator:
                raise ValueError("variable exponent must have denominator dividing 2")
            if f:
                cleaned.append((name, f))
        cleaned.sort()
        object.__setattr__(self, "var_exps", tuple(cleaned))

    def combine(self, other: "PrefactorLedger") -> "PrefactorLedger":
        exps = dict(self.var_exps)
        for name, f in other.var_exps:
            exps[name] = exps.get(name, Fraction(0)) + f
        return PrefactorLedger(
            self.i_power + other.i_power,
            self.q_exp + other.q_exp,
            tuple(exps.items()),
        )

    def scale(self, k: int) -> "PrefactorLedger":
        """The ledger of the k-th power (k may be negative)."""
        return PrefactorLedger(
            self.i_power * k,
            self.q_exp * k,
            tuple((name, f * k) for name, f in self.var_exps),
        )

    def is_scalar(self) -> bool:
        return self.q_exp == 0 and not self.var_exps

    def scalar_sign(self) -> int:
        """+1 or -1 for an even scalar ledger; raises otherwise."""
        if not self.is_scalar():
            raise ValueError("ledger has uncancelled fractional exponents")
        if self.i_power % 2:
            raise ValueError("ledger scalar is imaginary; branch conventions are inconsistent")
        return -1 if self.i_power == 2 else 1


# -- substitution width bounds ----------------------------------------------


@dataclass(frozen=True)
class PWidthBound:
    """A certified bound on the ``p``-exponent support of a bivariate series.

    ``fn(a)`` bounds ``|p-exponent|`` over all terms of the untruncated
    series at q-order ``a``.  The three certificate integers promise
    ``fn(a) <= sqrt_coeff * isqrt(sqrt_arg * a) + offset`` for every ``a``,
    which makes the image-degree minimum below a finite computation.
    """

    fn: Callable[[int], int]
    sqrt_coeff: int
    sqrt_arg: int
    offset: int

    def check_certificate(self, a: int) -> bool:
        return self.fn(a) <= self.sqrt_coeff * isqrt(self.sqrt_arg * a) + self.offset


def _tail_min_image_degree(width: PWidthBound, dq: int, dp_abs: int, start: int) -> int:
    """Exact ``min over a >= start`` of ``a*dq - width.fn(a)*dp_abs``.

    Terms at q-order ``a`` land at image degree at least this value; the
    square-root certificate makes the objective eventually increasing, so a
    finite scan with a monotone tail bound is exact.
    """
    if dq < 1:
        raise ValueError("image degree of the grading variable must be >= 1")
    c, k, c0 = width.sqrt_coeff, width.sqrt_arg, width.offset

    def g(a: int) -> int:
        w = width.fn(a)
        if w > c * isqrt(k * a) + c0:
            raise ValueError("width bound violates its own certificate")
        return a * dq - w * dp_abs

    a_star = (k * (c * dp_abs) ** 2) // (4 * dq * dq) + 1
    hi = max(start, a_star) + 4
    best = min(g(a) for a in range(start, hi + 1))
    while True:
        a = hi + 1
        tail = dq * a - dp_abs * (c * (isqrt(k * a) + 1) + c0)
        if tail >= best:
            return best
        new_hi = 2 * hi
        best = min(best, min(g(x) for x in range(hi + 1, new_hi + 1)))
        hi = new_hi


def required_source_order(width: PWidthBound, dq: int, dp_abs: int, target_order: int) -> int:
    """Least source q-order M so a width-bounded substitution is exact to
    ``target_order`` in the image grading."""
    for m in range(0, 100_000):
        if _tail_min_image_degree(width, dq, dp_abs, m + 1) - 1 >= target_order:
            return m
    raise ValueError("no feasible source order below the search cap")
