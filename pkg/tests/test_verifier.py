import pytest

from finring.verifier import (
    THEOREMS,
    ConfigError,
    consistency_suite,
    reports_json,
    run_theorem,
    search_counterexample,
)

SPEC_IDS = ["JACOBSON_LEMMA", "CLINE_D", "CLINE_GD", "CLINE_PD", "STRONGLY_CLEAN_TRANSFER",
            "ONE_MINUS_CLEAN", "PSEUDO_ONE_MINUS", "CORNER_CLEAN", "CORNER_PI_REGULAR",
            "CORNER_QUASIPOLAR", "CORNER_PSEUDOPOLAR", "DECOMP_EQUIV_1_1", "DECOMP_EQUIV_1_2",
            "DECOMP_EQUIV_1_3", "LEMMA_S_SHARP", "UNIQUENESS", "RADICAL_CHAIN"]


def test_every_listed_theorem_has_a_routine():
    assert set(SPEC_IDS) <= set(THEOREMS)
    assert len({id(t.check) for t in THEOREMS.values()}) == len(THEOREMS)


def test_run_theorem_examples():
    rep = run_theorem("CLINE_D", "zmod:8")
    assert rep.passed and rep.cases_total == 64
    rep = run_theorem("JACOBSON_LEMMA", "mat:2:zmod:2")
    assert rep.passed and rep.cases_total == 256
    rep = run_theorem("UNIQUENESS", "zmod:1")
    assert rep.passed and rep.cases_total == 1


@pytest.mark.parametrize("tid", SPEC_IDS)
def test_counts_add_up(tid):
    rep = run_theorem(tid, "tri:2:zmod:2")
    assert rep.cases_checked + rep.cases_not_applicable == rep.cases_total
    assert rep.passed


def test_not_applicable_is_counted():
    rep = run_theorem("JACOBSON_LEMMA", "zmod:4")
    applicable = sum(1 for a in range(4) for b in range(4) if (1 + a * b) % 2 == 1)
    assert applicable == 12
    assert rep.cases_checked == applicable and rep.cases_not_applicable == 16 - applicable


def test_unknown_theorem_and_cap():
    with pytest.raises(ConfigError):
        run_theorem("NOPE", "zmod:4")
    with pytest.raises(ConfigError):
        run_theorem("CORNER_CLEAN", "mat:2:zmod:3")
    with pytest.raises(ConfigError):
        run_theorem("CLINE_D", "mat:2:zmod:4", pair_cap=100)
    with pytest.raises(ConfigError):
        run_theorem("CLINE_D", "zmod:x")


def test_force_overrides_cap():
    rep = run_theorem("CORNER_CLEAN", "tri:3:zmod:2", pair_cap=8, force=True)
    assert rep.passed


def test_sample_mode_is_seeded():
    a = run_theorem("CLINE_PD", "mat:2:zmod:2", mode="sample", sample=30, seed=7)
    b = run_theorem("CLINE_PD", "mat:2:zmod:2", mode="sample", sample=30, seed=7)
    assert a.cases_total == 30 and a.mode == "sample(n=30,seed=7)"
    assert reports_json([a]) == reports_json([b])
    with pytest.raises(ConfigError):
        run_theorem("CLINE_PD", "zmod:4", mode="sample")


def test_search_counterexample():
    res = search_counterexample("CLINE_D", [f"zmod:{n}" for n in range(2, 13)])
    assert res.exhausted and res.failure is None
    assert res.cases_run == sum(n * n for n in range(2, 13))
    res = search_counterexample("CLINE_D", ["zmod:6"], budget=0)
    assert res.exhausted and res.cases_run == 0
    res = search_counterexample("CLINE_D", ["zmod:6"], budget=10)
    assert res.cases_run == 10


def test_weakened_corner_probe_runs():
    res = search_counterexample("CORNER_QUASIPOLAR_ANY_E", ["mat:2:zmod:2"])
    # either outcome is informative; for finite rings every element is quasipolar
    assert res.exhausted or res.failure is not None


def test_consistency_suite():
    for spec in ["zmod:12", "tri:2:zmod:2", "zmod:1"]:
        rep = consistency_suite(spec)
        assert rep.passed, rep.failures
        assert rep.cases_checked + rep.cases_not_applicable == rep.cases_total


def test_report_json_excludes_timing_by_default():
    rep = run_theorem("RADICAL_CHAIN", "zmod:6")
    assert "wall_time" not in reports_json([rep])
    assert "wall_time" in reports_json([rep], timings=True)


def test_wrong_cline_formula_is_caught(monkeypatch):
    import finring.verifier as verifier
    from finring.inverses import DrazinResult, drazin

    def single_power(a, b, variant="drazin"):
        c = drazin(a * b, variant).inverse
        wrong = b * c * a
        return DrazinResult(variant, wrong, 0, wrong)

    monkeypatch.setattr(verifier, "cline", single_power)
    rep = run_theorem("CLINE_D", "mat:2:zmod:2")
    assert not rep.passed
    assert {"a", "b", "formula", "oracle"} <= set(rep.failures[0])


def test_wrong_clean_transfer_is_caught(monkeypatch):
    import finring.verifier as verifier
    from finring.inverses import CleanDecomposition

    # sign flipped: v = g - ba instead of ba - g
    def flipped(a, b, d):
        g = d.idempotent
        return CleanDecomposition(g, g - b * a)

    monkeypatch.setattr(verifier, "strongly_clean_transfer", flipped)
    assert not run_theorem("STRONGLY_CLEAN_TRANSFER", "zmod:6").passed
