"""Gamma / semi-gamma expansions and the David-Barton machinery."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from altrun import gammalab as gl
from altrun.errors import NotDivisible, NotSymmetric
from altrun.families import eulerian, polyseq, triangle
from altrun.polys import Poly

F = Fraction


def test_gamma_expand_A3():
    form = gl.gamma_expand(Poly([0, 1, 4, 1]), 1, 3)
    assert form.base_degree == 2
    assert form.gammas == (F(1), F(2))
    assert form.is_positive()


def test_gamma_expand_F2_not_positive():
    form = gl.gamma_expand(Poly([0, 1, 1, 1]), 1, 3)
    assert form.gammas == (F(1), F(-1))
    assert not form.is_positive()


def test_gamma_expand_square():
    form = gl.gamma_expand(Poly([1, 2, 1]), 0, 2)
    assert form.gammas == (F(1), F(0))


def test_gamma_expand_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        gl.gamma_expand(Poly([0, 2, 12, 10]), 1, 3)


def test_semi_gamma_F3_over_x():
    form = gl.semi_gamma_expand(Poly([1, 3, 7, 3, 1]), 0, 4)
    assert (form.nu, form.lambdas) == (0, (F(1), F(3), F(5)))


def test_semi_gamma_odd_cube():
    form = gl.semi_gamma_expand(Poly([1, 3, 3, 1]), 0, 3)
    assert (form.nu, form.lambdas) == (1, (F(1), F(2)))


def test_semi_gamma_constant():
    form = gl.semi_gamma_expand(Poly([1]), 0, 0)
    assert (form.nu, form.lambdas) == (0, (F(1),))


def test_gamma_to_lambda_examples():
    assert gl.gamma_to_lambda(gl.GammaForm(2, (F(1), F(0)))).lambdas == (F(1), F(2))
    assert gl.gamma_to_lambda(gl.GammaForm(2, (F(1), F(-1)))).lambdas == (F(1), F(1))
    zero = gl.gamma_to_lambda(gl.GammaForm(4, (F(0), F(0), F(0))))
    assert zero.lambdas == (F(0), F(0), F(0))


def test_split_even_odd():
    g1, g2 = gl.split_even_odd(Poly([1, 3, 7, 3, 1]), 0)
    assert g1 == Poly([1, 7, 1])
    assert g2 == Poly([3, 3])

    g1, g2 = gl.split_even_odd(Poly([1, 0, 1]), 0)
    assert g1 == Poly([1, 1])
    assert g2 == Poly.zero()

    g1, g2 = gl.split_even_odd(Poly([1, 3, 3, 1]), 1)  # quotient (1+x)^2
    assert g1 == Poly([1, 1])
    assert g2 == Poly([2])

    with pytest.raises(NotDivisible):
        gl.split_even_odd(Poly([1, 0, 1]), 1)


def test_split_reassembles():
    p = Poly([1, 3, 7, 3, 1])
    g1, g2 = gl.split_even_odd(p, 0)
    assert g1.compose(Poly([0, 0, 1])) + Poly.x() * g2.compose(Poly([0, 0, 1])) == p


def test_david_barton_assemble_examples():
    a3 = gl.GammaForm(4, (F(0), F(1), F(2)))
    assert gl.david_barton_assemble(a3, 3, 1) == Poly([0, 2, 4])

    b2 = gl.GammaForm(2, (F(1), F(4)))
    assert gl.david_barton_assemble(b2, 2, 0) == Poly([1, 4, 3])

    a2 = gl.GammaForm(3, (F(0), F(1)))
    assert gl.david_barton_assemble(a2, 2, 1) == Poly([0, 2])


def test_identity_check_worked_sample():
    # at t = 1/3: x = 4/5 and both sides evaluate to 8/5
    a2 = eulerian(2, "A")
    r2 = triangle("R", 2).row_poly(2)
    t = F(1, 3)
    x = (1 - t * t) / (1 + t * t)
    assert x == F(4, 5)
    rhs = ((1 + x) / 2) * (1 + t) ** 3 * a2.evaluate((1 - t) / (1 + t))
    assert rhs == F(8, 5) == r2.evaluate(x)
    assert gl.david_barton_identity_check(a2, r2, 2, 1, [F(1, 3), F(1, 2)])


def test_identity_check_needs_enough_samples():
    a2 = eulerian(2, "A")
    r2 = triangle("R", 2).row_poly(2)
    assert not gl.david_barton_identity_check(a2, r2, 2, 1, [F(1, 3)])


def test_identity_check_rejects_mutations():
    a3 = eulerian(3, "A")
    r3 = triangle("R", 3).row_poly(3)
    samples = gl.default_samples(r3.degree + 1)
    assert gl.david_barton_identity_check(a3, r3, 3, 1, samples)
    # bump one gamma entry on either side
    mutated_assembly = gl.david_barton_assemble(
        gl.GammaForm(4, (F(0), F(2), F(2))), 3, 1
    )
    assert not gl.david_barton_identity_check(a3, mutated_assembly, 3, 1, samples)
    mutated_m = a3 + Poly.x() * Poly([1, 1]) ** 2
    assert not gl.david_barton_identity_check(mutated_m, r3, 3, 1, samples)


def test_db_range_certificates():
    for n in range(2, 7):
        r_n = triangle("R", n).row_poly(n)
        samples = gl.default_samples(r_n.degree + 1)
        assert gl.david_barton_identity_check(eulerian(n, "A"), r_n, n, 1, samples)
    bpolys = polyseq("bpoly", 6)
    for n in range(1, 7):
        b_n = bpolys.poly(n)
        samples = gl.default_samples(b_n.degree + 1)
        assert gl.david_barton_identity_check(eulerian(n, "B"), b_n, n, 0, samples)


@st.composite
def _symmetric_polys(draw):
    d = draw(st.integers(0, 10))
    half = draw(
        st.lists(
            st.integers(-8, 8), min_size=d // 2 + 1, max_size=d // 2 + 1
        )
    )
    coeffs = [0] * (d + 1)
    for i, c in enumerate(half):
        coeffs[i] = c
        coeffs[d - i] = c
    return Poly(coeffs), d


@given(_symmetric_polys())
def test_expand_roundtrips(case):
    p, d = case
    form = gl.gamma_expand(p, 0, d)
    assert form.reassemble() == p
    semi = gl.semi_gamma_expand(p, 0, d)
    assert semi.reassemble() == p
    assert gl.gamma_to_lambda(form) == semi


def test_serialization():
    form = gl.gamma_expand(Poly([0, 1, 1, 1]), 1, 3)
    assert form.to_json_dict() == {"base": 2, "coeffs": ["1", "-1"]}
    semi = gl.semi_gamma_expand(Poly([1, 3, 3, 1]), 0, 3)
    assert semi.to_json_dict() == {"nu": 1, "base": 1, "coeffs": ["1", "2"]}
