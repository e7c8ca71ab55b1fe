"""Tests for the brute-force profile enumeration and the unsigned counts."""
import pytest
from hypothesis import given, strategies as st

from bananagv.geometry import BananaShape, BranchSpec, branch_specs, registry_for
from bananagv.oracle import (
    BranchPartition,
    behrend_twist,
    branch_partitions,
    branch_series,
    branch_series_product,
    count_distinct_odd_conjugate,
    naive_pf,
    partitions,
)
from bananagv.series import VariableRegistry, polynomial

TWO = BananaShape(2, 2)

profiles = st.lists(st.integers(1, 8), max_size=8).map(
    lambda parts: tuple(sorted(parts, reverse=True))
)


# ------------------------------------------------------------- partitions


def test_partition_counts():
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert [sum(1 for _ in partitions(n)) for n in range(9)] == expected


def test_partitions_respect_max_part():
    assert list(partitions(4, 2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    with pytest.raises(ValueError):
        list(partitions(-1))


def test_branch_partition_validation():
    with pytest.raises(ValueError):
        BranchPartition((2, 3))
    with pytest.raises(ValueError):
        BranchPartition((1, 0))
    assert BranchPartition(()).size == 0


def test_conjugate_examples():
    assert BranchPartition((3, 1)).conjugate() == (2, 1, 1)
    assert BranchPartition((2, 2)).conjugate() == (2, 2)
    assert BranchPartition(()).conjugate() == ()


@given(profiles)
def test_conjugation_is_an_involution(parts):
    bp = BranchPartition(parts)
    conj = bp.conjugate()
    assert BranchPartition(conj).conjugate() == parts


@given(profiles)
def test_pairwise_rule_is_the_local_form_of_admissibility(parts):
    bp = BranchPartition(parts)
    assert bp.is_admissible() == bp.satisfies_pairwise_rule()


def test_admissible_profiles_of_size_four():
    assert {bp.parts for bp in branch_partitions(4)} == {
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    }


def test_admissible_profile_counts():
    assert [count_distinct_odd_conjugate(n) for n in range(7)] == [1, 1, 1, 2, 3, 4, 5]
    assert [len(branch_partitions(n)) for n in range(7)] == [1, 1, 1, 2, 3, 4, 5]


def test_weight_exponents_follow_the_branch_labels():
    ne = branch_specs(TWO, 0)[0]  # labels s0, r0, s1, r1
    reg = registry_for(TWO)  # names r0, r1, s0, s1
    bp = BranchPartition((3, 2, 1))
    assert bp.weight_exponents(ne, reg) == (2, 0, 3, 1)


# ---------------------------------------------------------- branch series


def all_specs():
    out = []
    for loc in (0, 1):
        out.extend(branch_specs(TWO, loc))
    for w in (1, 2, 3):
        out.extend(branch_specs(BananaShape(1, w), 0))
    return out


@pytest.mark.parametrize("spec", all_specs(), ids=lambda s: "-".join(s.labels))
def test_enumeration_matches_the_product_form(spec):
    assert branch_series(spec, 6) == branch_series_product(spec, 6)


def test_branch_series_degree_totals_are_the_profile_counts():
    s = branch_series(branch_specs(TWO, 0)[0], 6)
    for n in range(7):
        total = sum(c for e, c in s.terms.items() if sum(e) == n)
        assert total == count_distinct_odd_conjugate(n)


def test_single_branch_spot_values():
    spec = BranchSpec("NE", 4, ("s1", "r0", "s0", "r1"))
    s = branch_series(spec, 5)
    assert s == branch_series_product(spec, 5)
    assert s.registry.names == ("r0", "r1", "s0", "s1")
    assert s.constant_term() == 1
    assert s.coefficient((0, 0, 0, 1)) == 1  # profile (1) on first edge s1
    assert s.coefficient((2, 0, 0, 2)) == 1  # profile (2, 2) covering s1, r0


def test_branch_series_at_order_zero_is_one():
    spec = branch_specs(BananaShape(1, 1), 0)[0]
    assert branch_series(spec, 0).terms == {(0, 0): 1}


def test_branch_series_requires_unit_weights():
    spec = BranchSpec("NE", 2, ("s0", "r0"))
    heavy = VariableRegistry(("r0", "s0"), (1, 2))
    with pytest.raises(ValueError):
        branch_series(spec, 4, heavy)
    with pytest.raises(ValueError):
        branch_series_product(spec, 4, heavy)


# ------------------------------------------------------------ naive counts


def test_naive_pf_2x2_spot_values():
    s = naive_pf(TWO, 4)
    assert s.constant_term() == 2  # one empty configuration per location
    for name in ("r0", "r1", "s0", "s1"):
        assert s.coefficient(s.registry.exps(**{name: 1})) == 2


def test_naive_pf_1x2_spot_values():
    s = naive_pf(BananaShape(1, 2), 4)
    assert s.constant_term() == 2
    assert s.coefficient((0, 0, 1)) == 4  # s starts two branches at each location


def test_naive_pf_counts_are_nonnegative():
    for shape in (TWO, BananaShape(1, 1), BananaShape(1, 3)):
        s = naive_pf(shape, 3)
        assert all(c >= 0 for c in s.terms.values())


def test_naive_pf_is_cyclically_symmetric():
    shape = BananaShape(1, 3)
    s = naive_pf(shape, 4)
    reg = s.registry  # r0, r1, r2, s
    images = {
        "r0": (1, reg.exps(r1=1)),
        "r1": (1, reg.exps(r2=1)),
        "r2": (1, reg.exps(r0=1)),
        "s": (1, reg.exps(s=1)),
    }
    assert s.substitute_monomials(reg, images) == s


# ------------------------------------------------------------------ twist


def test_twist_negates_odd_degrees():
    reg = VariableRegistry(("s",))
    assert behrend_twist(polynomial(reg, {(0,): 1, (1,): 1}, 3)).terms == {
        (0,): 1,
        (1,): -1,
    }
    s = naive_pf(TWO, 3)
    t = behrend_twist(s)
    assert t.terms == {e: (-1) ** sum(e) * c for e, c in s.terms.items()}


def test_twist_is_an_involution():
    s = naive_pf(BananaShape(1, 2), 4)
    assert behrend_twist(behrend_twist(s)) == s
