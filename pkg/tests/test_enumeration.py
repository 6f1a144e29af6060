"""Generators, statistics, and brute-force distributions."""

import math

import pytest

from altrun import enumeration as en
from altrun.errors import InvalidStirlingWord, SizeLimit, StatClassMismatch
from altrun.families import polyseq, triangle
from altrun.polys import Poly


def test_generate_counts():
    assert len(list(en.generate("perm", 3))) == 6
    assert len(list(en.generate("signed", 3))) == 48
    assert len(list(en.generate("signed_hat", 3))) == 24
    assert len(list(en.generate("stirling", 3))) == 15
    assert len(list(en.generate("dual_stirling", 3))) == 15
    assert len(list(en.generate("derangement", 4))) == 9


def test_generate_small_streams():
    assert list(en.generate("stirling", 2)) == [
        (1, 1, 2, 2),
        (1, 2, 2, 1),
        (2, 2, 1, 1),
    ]
    assert list(en.generate("derangement", 3)) == [(2, 3, 1), (3, 1, 2)]
    assert list(en.generate("perm", 0)) == [()]
    assert list(en.generate("stirling", 0)) == [()]


def test_streams_are_lexicographic():
    for kind, n in (("perm", 4), ("signed", 3), ("signed_hat", 3),
                    ("stirling", 4), ("dual_stirling", 4)):
        words = list(en.generate(kind, n))
        assert words == sorted(words)
        assert len(set(words)) == len(words) == en.cardinality(kind, n)


def test_signed_hat_requires_positive_start():
    assert all(w[0] > 0 for w in en.generate("signed_hat", 3))
    with pytest.raises(ValueError):
        en.cardinality("signed_hat", 0)


def test_altrun_udrun_example():
    word = (3, 2, 4, 1, 5, 6)
    assert en.altrun(word) == 4
    assert en.udrun(word) == 5


def test_altrun_boundary_conventions():
    assert en.altrun((1,)) == 0
    assert en.altrun(()) == 0
    assert en.udrun(()) == 0
    assert en.udrun((1,)) == 1


def test_crun_examples():
    assert en.crun((1, 2, 3)) == 3  # (1)(2)(3)
    assert en.crun((3, 1, 2)) == 3  # cycle (1 3 2)
    assert en.cycle_runs((1, 3, 2)) == 3
    # crun(w) = 2 cpk(w) + 1 on single cycles
    for word in en.generate("perm", 5):
        cycles = en.cycle_canonical(word)
        for cyc in cycles:
            # appended infinity sentinel: the final entry is never a peak
            peaks = sum(
                1
                for i in range(1, len(cyc) - 1)
                if cyc[i - 1] < cyc[i] > cyc[i + 1]
            )
            assert en.cycle_runs(cyc) == 2 * peaks + 1


def test_cycle_canonical_examples():
    assert en.cycle_canonical((2, 3, 1)) == ((1, 2, 3),)
    assert en.cycle_canonical((2, 1, 4, 3)) == ((1, 2), (3, 4))
    assert en.cycle_canonical((3, 1, 2)) == ((1, 3, 2),)
    assert en.format_cycles(((1, 3, 2), (4, 5))) == "(1 3 2)(4 5)"
    assert en.crun_of_cycles(((1,), (2,), (3,))) == 3


def test_cycle_canonical_is_bijective():
    for n in range(9):
        for word in en.generate("perm", n):
            assert en.cycles_to_word(en.cycle_canonical(word), n) == word


def test_dual_map_examples():
    assert en.dual_map((2, 2, 1, 3, 3, 1)) == (4, 3, 2, 6, 5, 1)
    assert en.dual_map((1, 1)) == (2, 1)
    assert en.dual_map((1, 1, 2, 2)) == (2, 1, 4, 3)


def test_dual_map_rejects_invalid():
    with pytest.raises(InvalidStirlingWord):
        en.dual_map((2, 1, 1, 2))  # 1-pair inside the 2-pair
    with pytest.raises(InvalidStirlingWord):
        en.dual_map((1, 1, 1))
    with pytest.raises(InvalidStirlingWord):
        en.dual_map((1, 2, 2))


def test_dual_map_invariants_through_7():
    for n in range(1, 8):
        for sw in en.generate("stirling", n):
            img = en.dual_map(sw)
            fap = en.flag_ascent_plateaus(sw)
            assert fap == en.altrun(img)
            assert fap == en.ascent_plateaus(sw) + en.left_ascent_plateaus(sw)
            # images always end with a descending run
            assert img[-2] > img[-1]


def test_dual_map_pair_positions():
    # 2j precedes 2j-1 and everything between them is larger than 2j
    for n in range(1, 6):
        for sw in en.generate("stirling", n):
            img = en.dual_map(sw)
            for j in range(1, n + 1):
                lo = img.index(2 * j)
                hi = img.index(2 * j - 1)
                assert lo < hi
                assert all(v > 2 * j for v in img[lo + 1 : hi])


def test_as_equals_udrun():
    for n in range(1, 9):
        for word in en.generate("perm", n):
            assert en.longest_alternating_subsequence(word) == en.udrun(word)


def test_signed_altrun_examples():
    assert en.signed_altrun((1, 2)) == 1
    assert en.signed_altrun((2, -1)) == 2
    assert en.signed_altrun((1,)) == 1


def test_distribution_examples():
    assert en.distribution("perm", 3, [("altrun", "x")]).as_poly("x") == Poly([0, 2, 4])
    assert en.distribution("stirling", 2, [("fap", "x")]).as_poly("x") == Poly(
        [0, 1, 1, 1]
    )
    rq3 = en.distribution("perm", 3, [("crun", "x"), ("cyc", "q")])
    assert rq3 == triangle("Rq", 3).row_multipoly(3, "x", "q")


def test_distribution_total_mass():
    for n in range(7):
        dist = en.distribution("perm", n, [("altrun", "x")])
        assert dist.evaluate({"x": 1}) == math.factorial(n)


def test_stat_dispatch():
    assert en.stat((3, 2, 4, 1, 5, 6), "altrun") == 4
    assert en.stat((2, -1), "altrun_B", "signed") == 2
    assert en.stat((1, 1, 2, 2), "fap", "stirling") == 3
    with pytest.raises(StatClassMismatch):
        en.stat((1, 2), "fap", "perm")
    with pytest.raises(StatClassMismatch):
        en.stat((1, 2), "altrun", "signed")


def test_budget(monkeypatch):
    monkeypatch.setenv("ALTRUN_BUDGET", "10")
    with pytest.raises(SizeLimit):
        list(en.generate("perm", 4))
    with pytest.raises(SizeLimit):
        en.distribution("perm", 4, [("altrun", "x")])
    monkeypatch.delenv("ALTRUN_BUDGET")
    assert len(list(en.generate("perm", 4))) == 24


def test_format_word():
    assert en.format_word((3, 2, 4, 1, 5, 6)) == "324156"
    assert en.format_word((2, -1), "signed") == "+2 -1"
    assert en.format_word((2, 2, 1, 3, 3, 1), "stirling") == "221331"


def test_signed_hat_distribution_matches_c():
    seq = polyseq("cpoly", 4)
    for n in range(1, 5):
        dist = en.distribution("signed_hat", n, [("altrun_B", "x")]).as_poly("x")
        assert dist == seq.poly(n)


def test_derangement_crun_matches_d():
    seq = polyseq("dpoly", 5)
    for n in range(1, 6):
        dist = en.distribution("derangement", n, [("crun", "x")]).as_poly("x")
        assert dist == seq.poly(n)
