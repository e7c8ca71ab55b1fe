"""Tests for the closed-form partition functions, tables, and cross-checks."""
import pytest

from bananagv.geometry import BananaShape, registry_for
from bananagv.gvpf import (
    CrossCheckReport,
    cross_check,
    gv_table,
    pf_1w,
    pf_22,
    pf_22_theta,
    pf_for_shape,
)
from bananagv.qseries import jacobi_phi_at
from bananagv.series import grlex_key

TWO = BananaShape(2, 2)


# ------------------------------------------------------------------ (2,2)


def test_pf_22_low_degrees():
    pf = pf_22(4)
    assert pf.constant_term() == 2
    reg = pf.registry
    for name in ("r0", "r1", "s0", "s1"):
        assert pf.coefficient(reg.exps(**{name: 1})) == -2
        assert pf.coefficient(reg.exps(**{name: 2})) == 0
    assert pf.coefficient(reg.exps(r0=1, s0=1)) == 6
    assert pf.coefficient(reg.exps(r1=1, s1=1)) == 6
    assert pf.coefficient(reg.exps(r0=1, s1=1)) == 2
    assert pf.coefficient(reg.exps(r1=1, s0=1)) == 2
    assert pf.coefficient(reg.exps(r0=1, r1=1)) == 2
    assert pf.coefficient(reg.exps(s0=1, s1=1)) == 2


def test_pf_22_supports_only_nonnegative_exponents():
    assert all(min(e) >= 0 for e in pf_22(5).terms)


def test_pf_22_symmetries():
    pf = pf_22(5)
    reg = pf.registry

    def swapped(mapping):
        images = {a: (1, reg.exps(**{b: 1})) for a, b in mapping.items()}
        return pf.substitute_monomials(reg, images)

    assert swapped({"r0": "s0", "s0": "r0", "r1": "s1", "s1": "r1"}) == pf
    assert swapped({"r0": "r1", "r1": "r0", "s0": "s1", "s1": "s0"}) == pf


def test_theta_route_agrees_with_sqrt_route():
    assert pf_22_theta(6) == pf_22(6)
    assert pf_22_theta(0).constant_term() == 2


def test_pf_22_validation():
    with pytest.raises(ValueError):
        pf_22(-1)
    with pytest.raises(ValueError):
        pf_22_theta(-2)


# ------------------------------------------------------------------ (1,w)


def test_pf_11_reduces_to_the_single_banana_form():
    # one cell: the partition function is s * phi(q -> r0 s, p -> s)
    pf = pf_1w(1, 10)
    reg = registry_for(BananaShape(1, 1))
    phi = jacobi_phi_at(reg, (1, 1), (0, 1), 10)
    expected = phi.shift_monomial(reg.exps(s=1))
    assert pf.same_series(expected, up_to=10)


def test_pf_11_spot_values():
    pf = pf_1w(1, 5)
    spots = {
        (0, 0): 1,
        (0, 1): -2,
        (1, 0): -2,
        (0, 2): 1,
        (1, 1): 8,
        (2, 0): 1,
        (1, 2): -12,
        (2, 1): -12,
        (1, 3): 8,
        (3, 1): 8,
        (2, 2): 39,
    }
    for exps, value in spots.items():
        assert pf.coefficient(exps) == value


def test_pf_12_spot_values():
    pf = pf_1w(2, 5)
    reg = pf.registry
    assert pf.constant_term() == 2
    assert pf.coefficient(reg.exps(r0=1)) == -2
    assert pf.coefficient(reg.exps(r1=1)) == -2
    assert pf.coefficient(reg.exps(s=1)) == -4


def test_pf_1w_is_cyclically_symmetric():
    pf = pf_1w(3, 4)
    reg = pf.registry
    images = {
        "r0": (1, reg.exps(r1=1)),
        "r1": (1, reg.exps(r2=1)),
        "r2": (1, reg.exps(r0=1)),
        "s": (1, reg.exps(s=1)),
    }
    assert pf.substitute_monomials(reg, images) == pf


def test_pf_1w_constant_counts_locations():
    for w in (1, 2, 3, 4):
        assert pf_1w(w, 2).constant_term() == w


def test_pf_1w_supports_only_nonnegative_exponents():
    assert all(min(e) >= 0 for e in pf_1w(2, 5).terms)


def test_pf_1w_validation():
    with pytest.raises(ValueError):
        pf_1w(0, 4)
    with pytest.raises(ValueError):
        pf_1w(2, -1)


def test_pf_for_shape_dispatch():
    assert pf_for_shape(TWO, 3) == pf_22(3)
    assert pf_for_shape(BananaShape(1, 2), 3) == pf_1w(2, 3)
    with pytest.raises(ValueError):
        pf_for_shape(BananaShape(2, 3), 3)


# ------------------------------------------------------------ cross-checks


@pytest.mark.parametrize(
    "shape,order",
    [(BananaShape(1, 1), 6), (BananaShape(1, 2), 5), (TWO, 5)],
    ids=str,
)
def test_closed_form_matches_twisted_enumeration(shape, order):
    report = cross_check(shape, order)
    assert report.passed, report.describe()
    assert "matches" in report.describe()


def test_cross_check_report_describes_mismatches():
    report = CrossCheckReport(TWO, 3, False, ((1, 0, 0, 0), -2, 5))
    text = report.describe()
    assert "mismatch" in text and "-2" in text and "5" in text


# ----------------------------------------------------------------- tables


def test_gv_table_2x2():
    table = gv_table(TWO, 3)
    pf = pf_22(3)
    assert len(table.entries) == len(pf.terms)
    first_class, first_value = table.entries[0]
    assert first_value == 2
    assert first_class.degree == 0 and first_class.b == 1
    assert all(value != 0 for _, value in table.entries)
    assert all(cls.b == 1 for cls, _ in table.entries)
    degrees = [cls.degree for cls, _ in table.entries]
    assert degrees == sorted(degrees)


def test_gv_table_1xw_classes():
    table = gv_table(BananaShape(1, 2), 4)
    for cls, _ in table.entries:
        assert len(cls.a) == 2 and len(cls.c) == 1
        assert min(cls.a) >= 0 and cls.c[0] >= 0
    assert table.entries[0][1] == 2


def test_gv_table_rows_follow_the_series_order():
    table = gv_table(BananaShape(1, 1), 4)
    pf = pf_1w(1, 4)
    keys = [e for e, _ in pf.sorted_terms()]
    assert keys == sorted(keys, key=grlex_key)
    assert [v for _, v in table.entries] == [c for _, c in pf.sorted_terms()]
