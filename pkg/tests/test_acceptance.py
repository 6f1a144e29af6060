"""Acceptance gate: every criterion at its stated range and time budget.

Each test prints one PASS/FAIL line.  All comparisons are exact equality of
rational/polynomial values; the time budgets are wall-clock upper bounds for
the whole criterion.

Run with `pytest tests/test_acceptance.py -v -s` (or `altrun verify --suite
all` for the same checks through the CLI).
"""

import time

from altrun import verify


def _run(criterion: str, time_budget: float | None, pairs) -> None:
    start = time.monotonic()
    failures = []
    for check_id, fn, kwargs in pairs:
        ok, detail = fn(**kwargs)
        if not ok:
            failures.append(f"{check_id}: {detail}")
    elapsed = time.monotonic() - start
    ok = not failures and (time_budget is None or elapsed <= time_budget)
    budget = f"/{time_budget:.0f}s" if time_budget is not None else ""
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s{budget})")
    assert not failures, "; ".join(failures)
    if time_budget is not None:
        assert elapsed <= time_budget, f"{criterion} took {elapsed:.2f}s > {time_budget}s"


def test_criterion_1_triangle_enumeration_equivalence():
    _run(
        "1 triangle/enumeration equivalence",
        60.0,
        [
            ("altrun-vs-R n<=8", verify.check_altrun_vs_R, {}),
            ("udrun-vs-T n<=8", verify.check_udrun_vs_T, {}),
            ("crun-cyc-vs-Rq n<=8", verify.check_crun_cyc_vs_Rq, {}),
            ("derangement-crun-vs-d n<=9", verify.check_derangement_crun_vs_d, {}),
            ("stirling-fap-vs-F n<=7", verify.check_stirling_fap_vs_F, {}),
            (
                "dual-stirling-altrun-vs-F n<=7",
                verify.check_dual_stirling_altrun_vs_F,
                {},
            ),
            ("signed-desB-vs-B n<=6", verify.check_signed_desB_vs_B, {}),
            ("signed-hat-altrunB-vs-c n<=6", verify.check_signed_hat_altrunB_vs_c, {}),
        ],
    )


def test_criterion_2_grammar_equivalence():
    _run(
        "2 grammar equivalence",
        10.0,
        [
            ("updown grammar n<=10", verify.check_updown_grammar, {}),
            ("doubled grammar n<=10", verify.check_doubled_grammar, {}),
            ("q-run triangle n<=10", verify.check_qrun_triangle, {}),
            ("q-run recurrence n<=10", verify.check_qrun_recurrence, {}),
            ("plateau triangle n<=10", verify.check_plateau_triangle, {}),
            ("gamma triangle n<=10", verify.check_gammavec_triangle, {}),
            ("half-gamma triangle n<=10", verify.check_halfgamma_triangle, {}),
            ("gamma substitution", verify.check_gammavec_substitution, {}),
            ("half-gamma substitution", verify.check_halfgamma_substitution, {}),
            ("q-run to half-gamma morphism", verify.check_qrun_to_halfgamma_morphism, {}),
            ("extraction convolution n<=10", verify.check_extraction_convolution, {}),
        ],
    )


def test_criterion_3_identity_suite():
    _run(
        "3 identity suite",
        None,
        [
            ("T = (1+x)R/2, n<=12", verify.check_T_from_R, {}),
            ("R convolution n<=12", verify.check_leibniz_convolution, {}),
            ("root multiplicity n<=12", verify.check_root_multiplicity, {}),
            ("Rq parity n<=12", verify.check_Rq_parity, {}),
            ("d_n(-1) n<=12", verify.check_d_at_minus_one, {}),
            ("gamma diagonal n<=12", verify.check_gamma_diagonal, {}),
            ("f nonnegative n<=40", verify.check_f_nonnegative, {}),
        ],
    )


def test_criterion_4_david_barton_certificates():
    _run(
        "4 David-Barton certificates",
        5.0,
        [
            ("(A_n, R_n, delta=1) 2<=n<=10", verify.check_davidbarton_A_R, {}),
            ("(B_n, b_n, delta=0) 1<=n<=10", verify.check_davidbarton_B_b, {}),
            ("mutation sensitivity", verify.check_davidbarton_mutation, {}),
        ],
    )


def test_criterion_5_series_certificates():
    _run(
        "5 series certificates (order 12)",
        30.0,
        [
            ("egf_T", verify.check_series_T, {"order": 12}),
            ("egf_carlitz", verify.check_series_carlitz, {"order": 12}),
            ("egf_Rq q in {1,2,3,1/2}", verify.check_series_Rq, {"order": 12}),
            ("sqrt(T(2x,z)) = f EGF", verify.check_series_f, {"order": 12}),
            ("exp(-xz) T", verify.check_series_derangement, {"order": 12}),
            (
                "inclusion-exclusion n<=8",
                verify.check_series_inclusion_exclusion,
                {"order": 8},
            ),
            ("PDE + mutation", verify.check_series_pde, {"order": 12}),
            ("f diagonal", verify.check_series_f_diag, {"order": 12}),
            ("d diagonal", verify.check_series_d_diag, {"order": 12}),
            ("F dual samples + certificate", verify.check_series_F_dual, {"order": 12}),
            ("theta identities n<=10", verify.check_series_theta, {"order": 10}),
        ],
    )


def test_criterion_6_gamma_machinery():
    _run(
        "6 gamma machinery",
        10.0,
        [
            ("round trips", verify.check_gamma_roundtrip, {}),
            (
                "gamma_to_lambda vs semi_gamma_expand, 200 random",
                verify.check_gamma_to_lambda_random,
                {"count": 200, "max_degree": 16},
            ),
            ("positivity propagation", verify.check_gamma_positivity_propagation, {}),
            (
                "split halves gamma-positive n<=12",
                verify.check_split_halves_gamma_positive,
                {},
            ),
        ],
    )


def test_verify_cli_contract():
    """`verify --suite all --max-n 7 --order 10` passes on a correct build."""
    report = verify.run_suite("all", max_n=7, order=10)
    print(f"ACCEPTANCE verify-all(max_n=7, order=10): "
          f"{'PASS' if report.overall else 'FAIL'} ({len(report.checks)} checks)")
    assert report.overall, [c.check_id for c in report.checks if not c.ok]
