"""Truncated series combinators and the closed-form generating functions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from altrun import serieslab as sl
from altrun.errors import (
    BadConstantTerm,
    DegenerateSample,
    ExtensionResidue,
    NonInvertibleConstantTerm,
)
from altrun.families import polyseq, q_specialize, triangle
from altrun.fieldext import QuadExt, RatFunc
from altrun.polys import Poly

F = Fraction
Q = sl.RationalDomain()


def make(coeffs, order=None):
    order = order if order is not None else len(coeffs) - 1
    return sl.Series.make(Q, [F(c) for c in coeffs], order)


def test_exp_z():
    series = make([0, 1], order=3).exp()
    assert series.coeffs == (F(1), F(1), F(1, 2), F(1, 6))


def test_sqrt_binomial():
    series = make([1, 2], order=2).sqrt()
    assert series.coeffs == (F(1), F(1), F(-1, 2))


def test_pow_identity():
    T = sl.egf_T(5)
    assert T.pow_rational(1).coeffs == T.coeffs


def test_constant_term_guards():
    with pytest.raises(BadConstantTerm):
        make([1, 1]).exp()
    with pytest.raises(BadConstantTerm):
        make([0, 1]).log()
    with pytest.raises(BadConstantTerm):
        make([2, 1]).sqrt()
    with pytest.raises(NonInvertibleConstantTerm):
        make([1, 1]) / make([0, 1])


def test_series_str_table():
    text = str(make([1, 1], order=2))
    assert text.splitlines() == ["z^0/0!: 1", "z^1/1!: 1", "z^2/2!: 0"]


_series = st.lists(st.integers(-4, 4), min_size=0, max_size=5).map(
    lambda tail: make([1] + [F(c, 2) for c in tail], order=6)
)


@settings(max_examples=40)
@given(s=_series)
def test_exp_log_inverse(s):
    assert s.log().exp().coeffs == s.coeffs


@settings(max_examples=40)
@given(s=_series)
def test_sqrt_squares_back(s):
    root = s.sqrt()
    assert (root * root).coeffs == s.coeffs


@settings(max_examples=25)
@given(
    s=_series,
    a=st.fractions(min_value=-2, max_value=2, max_denominator=3),
    b=st.fractions(min_value=-2, max_value=2, max_denominator=3),
)
def test_pow_addition_law(s, a, b):
    lhs = s.pow_rational(a) * s.pow_rational(b)
    rhs = s.pow_rational(a + b)
    assert lhs.coeffs == rhs.coeffs


def test_egf_T_first_rows():
    T = sl.egf_T(3)
    assert T.egf_coefficient(0) == Poly.one()
    assert T.egf_coefficient(2) == Poly([0, 1, 1])
    assert T.egf_coefficient(3) == Poly([0, 1, 3, 2])


def test_egf_T_matches_triangle_12():
    assert sl.check_egf_T(12).ok


def test_carlitz_first_coefficients():
    C = sl.egf_carlitz(3)
    assert C.egf_coefficient(0) == Poly.one()
    assert C.egf_coefficient(1) == Poly([2])
    assert C.egf_coefficient(3) == Poly([10, 12, 2])


def test_carlitz_matches_reversed_rows_12():
    assert sl.check_egf_carlitz(12).ok


def test_egf_Rq_specializations():
    R2 = sl.egf_Rq(2, 6)
    r_tri = triangle("R", 7)
    for n in range(6):
        assert R2.egf_coefficient(n) == r_tri.row_poly(n + 1)
    rq = triangle("Rq", 5)
    half = sl.egf_Rq(F(1, 2), 5)
    for n in range(6):
        assert half.egf_coefficient(n) == q_specialize(rq.row(n), F(1, 2))


def test_egf_f_matches_f_triangle():
    series = sl.egf_f(6)
    tri = triangle("f", 6)
    assert series.egf_coefficient(3) == Poly([0, 1, 3, 5])
    for n in range(7):
        assert series.egf_coefficient(n) == tri.row_poly(n)


def test_derangement_egf():
    series = sl.egf_derangement(4)
    d = polyseq("dpoly", 4)
    assert series.egf_coefficient(3) == Poly([0, 1, 0, 1])
    for n in range(5):
        assert series.egf_coefficient(n) == d.poly(n)


def test_specialized_identity_dispatch():
    assert sl.egf_specialized_identities("derangement", {}, 8).ok
    assert sl.egf_specialized_identities("f_diag", {}, 8).ok
    assert sl.egf_specialized_identities("d_diag", {}, 8).ok
    assert sl.egf_specialized_identities("F_dual", {"x0": F(1, 2)}, 6).ok
    with pytest.raises(ValueError):
        sl.egf_specialized_identities("nope", {}, 3)


def test_f_diag_values():
    report = sl.check_f_diagonal(5)
    assert report.ok
    assert list(report.closed) == [1, 1, 1, 5, 17, 121]


def test_identity_report_json():
    report = sl.check_f_diagonal(4)
    d = report.to_json_dict()
    assert d["pass"] is True and d["order"] == 4
    assert set(d) == {"identity", "order", "pass", "first_mismatch"}


def test_F_dual_trivial_point():
    report = sl.check_F_dual_at(0, 8)
    assert report.ok
    assert list(report.closed)[1:] == [F(0)] * 8


def test_F_dual_degenerate():
    with pytest.raises(DegenerateSample):
        sl.check_F_dual_at(1, 4)


def test_pde_check():
    assert sl.pde_check(8)
    assert sl.pde_check(2)
    assert not sl.pde_check(8, mutate=(3, 2))


def test_theta_examples():
    disc = RatFunc(Poly([1, 1]), Poly([1, -1]))
    assert sl.theta_power_r(0) == QuadExt.radical(disc)
    t1 = sl.theta_power_r(1)
    assert t1 == QuadExt(0, RatFunc(Poly([0, 1]), Poly([1, 0, -1])), disc)
    t2 = sl.theta_power_r(2)
    expected_rad = RatFunc(Poly([0, 1, 1, 1])) / RatFunc(Poly([1, 0, -1])) ** 2
    assert t2 == QuadExt(0, expected_rad, disc)


def test_theta_range():
    assert sl.theta_check(10)


def test_extension_residue_guard():
    dom = sl.QuadExtDomain(sl._DISC_RHO)
    polluted = sl.Series.make(dom, [QuadExt.radical(sl._DISC_RHO)], 1)
    with pytest.raises(ExtensionResidue):
        sl._reduce_to_polys(polluted, "test")
    nonpoly = sl.Series.make(
        dom, [QuadExt(RatFunc(Poly([1]), Poly([1, 1])), 0, sl._DISC_RHO)], 1
    )
    with pytest.raises(ExtensionResidue):
        sl._reduce_to_polys(nonpoly, "test")


def test_scale_z():
    s = make([1, 1, 1], order=2).scale_z(F(2))
    assert s.coeffs == (F(1), F(2), F(4))
