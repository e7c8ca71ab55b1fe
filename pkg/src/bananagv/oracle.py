"""Brute-force enumeration of branch thickening profiles.

This module computes the naive (unsigned) count generating function of a
banana configuration by exhaustive enumeration, independently of the
closed-form product formulas, so the two routes can be checked against each
other.

A branch contributes a sum over *thickening profiles*: weakly decreasing
positive tuples ``parts`` where ``parts[j-1]`` is the multiplicity of the
j-th edge from the B edge.  A profile is admissible when its conjugate
partition has all odd parts distinct; equivalently, consecutive pairs
``parts[2k] - parts[2k+1]`` differ by at most 1 (the conjugate's entry ``v``
has multiplicity ``parts(v) - parts(v+1)``, so the dual condition is local).
The profile's weight is ``prod_j label(j) ** parts[j-1]``.

Admissible profiles of size n are counted by partitions with distinct odd
parts, whose generating function is
``prod 1/(1 - x^{2n}) * prod (1 + x^{2n-1})``; the per-branch series is the
same product with ``x^j`` replaced by the product of the branch's first j
labels, and ``branch_series_product`` builds it that way as a second route.

The full naive partition function multiplies the four branch series at each
B location and sums over locations.  ``behrend_twist`` converts it to the
signed count by negating every tracking variable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .geometry import BananaShape, BranchSpec, b_locations, branch_specs, registry_for
from .series import ExponentVector, TruncatedSeries, VariableRegistry, one, polynomial

__all__ = [
    "BranchPartition",
    "partitions",
    "branch_partitions",
    "count_distinct_odd_conjugate",
    "branch_series",
    "branch_series_product",
    "naive_pf",
    "behrend_twist",
]


@dataclass(frozen=True)
class BranchPartition:
    """A weakly decreasing tuple of edge multiplicities along one branch."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError("multiplicities must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("multiplicities must not increase along the branch")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(
            sum(1 for p in self.parts if p >= v) for v in range(1, self.parts[0] + 1)
        )

    def is_admissible(self) -> bool:
        """Conjugate partition has all odd parts distinct."""
        conj = self.conjugate()
        odd = [v for v in conj if v % 2]
        return len(odd) == len(set(odd))

    def satisfies_pairwise_rule(self) -> bool:
        """Equivalent local form: each odd-indexed part exceeds its successor
        by at most 1 (successor 0 past the end)."""
        padded = self.parts + (0,)
        return all(padded[i] - padded[i + 1] <= 1 for i in range(0, len(self.parts), 2))

    def weight_exponents(self, spec: BranchSpec, registry: VariableRegistry) -> ExponentVector:
        """Exponent vector of ``prod_j label(j) ** parts[j-1]``."""
        vec = [0] * registry.size
        for j, mult in enumerate(self.parts, start=1):
            vec[registry.index(spec.label(j))] += mult
        return tuple(vec)


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All weakly decreasing positive tuples summing to n."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def branch_partitions(n: int) -> list[BranchPartition]:
    """Admissible thickening profiles of total size n."""
    return [
        bp for p in partitions(n) if (bp := BranchPartition(p)).is_admissible()
    ]


@lru_cache(maxsize=None)
def count_distinct_odd_conjugate(n: int) -> int:
    """Number of partitions of n whose odd parts are distinct (equal, by
    conjugation, to the number whose conjugate has distinct odd parts)."""
    count = 0
    for p in partitions(n):
        odd = [x for x in p if x % 2]
        if len(odd) == len(set(odd)):
            count += 1
    return count


def _registry_for_spec(spec: BranchSpec) -> VariableRegistry:
    return VariableRegistry(tuple(sorted(set(spec.labels))))


def branch_series(
    spec: BranchSpec, N: int, registry: VariableRegistry | None = None
) -> TruncatedSeries:
    """Generating function of one branch by explicit profile enumeration.

    Every edge variable has degree 1, so profiles of size > N cannot
    contribute below the truncation order and the enumeration is finite.
    """
    if registry is None:
        registry = _registry_for_spec(spec)
    if any(w != 1 for w in registry.weights):
        raise ValueError("branch enumeration expects unit-weight tracking variables")
    acc: dict[ExponentVector, int] = {}
    for n in range(N + 1):
        for bp in branch_partitions(n):
            e = bp.weight_exponents(spec, registry)
            acc[e] = acc.get(e, 0) + 1
    return TruncatedSeries(registry, acc, N)


def _first_labels_exponents(
    spec: BranchSpec, j: int, registry: VariableRegistry
) -> ExponentVector:
    vec = [0] * registry.size
    for k in range(1, j + 1):
        vec[registry.index(spec.label(k))] += 1
    return tuple(vec)


def branch_series_product(
    spec: BranchSpec, N: int, registry: VariableRegistry | None = None
) -> TruncatedSeries:
    """The same branch generating function from its product form:
    ``prod_odd (1 + m(j)) * prod_even 1/(1 - m(j))`` where m(j) is the
    product of the branch's first j labels."""
    if registry is None:
        registry = _registry_for_spec(spec)
    acc = one(registry, N)
    for j in range(1, N + 1):
        m_j = _first_labels_exponents(spec, j, registry)
        factor = polynomial(registry, {registry.zero_exps(): 1, m_j: -1 if j % 2 == 0 else 1}, N)
        acc = acc * (factor.invert_unit() if j % 2 == 0 else factor)
    return acc


def naive_pf(shape: BananaShape, N: int) -> TruncatedSeries:
    """Unsigned count generating function: product of the four branch series
    at each B location, summed over locations.  Coefficients are counts and
    must come out nonnegative."""
    registry = registry_for(shape)
    total = TruncatedSeries(registry, {}, N)
    for loc in b_locations(shape):
        contribution = one(registry, N)
        for spec in branch_specs(shape, loc):
            contribution = contribution * branch_series(spec, N, registry)
        total = total + contribution
    if any(c < 0 for c in total.terms.values()):
        raise AssertionError("naive count came out negative; enumeration bug")
    return total


def behrend_twist(series: TruncatedSeries) -> TruncatedSeries:
    """Negate every tracking variable: multiplies each coefficient by
    (-1)^degree, converting naive counts to signed invariants."""
    registry = series.registry
    images = {
        name: (-1, tuple(1 if i == k else 0 for k in range(registry.size)))
        for i, name in enumerate(registry.names)
    }
    return series.substitute_monomials(registry, images)
