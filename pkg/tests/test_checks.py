"""The statement registry: verdict discipline and frozen desk profiles."""

from collections import Counter

import pytest

from coprimespec.analysis import analyze
from coprimespec.bicomodule import regular_bicomodule
from coprimespec.catalog import (chain_inclusion, comatrix, divided_power,
                                 grouplike, permutation_morphism,
                                 random_instance)
from coprimespec.checks import (FAIL, PASS, UNSUPPORTED, VACUOUS, Verdict,
                                morphism_checks, run_checks, statement_names)
from coprimespec.fields import prime_field, rationals

F2 = prime_field(2)
F3 = prime_field(3)
QQ = rationals()


def profile(verdicts):
    return Counter(v.status for v in verdicts)


def test_verdicts_require_witnesses_for_failures():
    Verdict("demo", PASS, "fine")
    Verdict("demo", FAIL, "broken", {"where": 1})
    with pytest.raises(ValueError):
        Verdict("demo", FAIL, "broken")


def test_statement_names_are_stable_and_ordered():
    names = statement_names()
    assert names[0] == "annihilator-kernel-galois"
    assert "closure-formula" in names
    assert "morphism-spectral-map" in names
    assert len(names) == len(set(names)) == 23


def test_divided_power_chain_passes_every_statement():
    a = analyze(regular_bicomodule(divided_power(4, F2)))
    verdicts = run_checks(a)
    assert profile(verdicts) == {PASS: 50}


def test_grouplike_passes_every_statement():
    a = analyze(regular_bicomodule(grouplike(2, F2)))
    assert profile(run_checks(a)) == {PASS: 50}


def test_comatrix_profile_has_one_vacuous_morphism_part():
    a = analyze(regular_bicomodule(comatrix(2, F2)))
    verdicts = run_checks(a)
    assert profile(verdicts) == {PASS: 49, VACUOUS: 1}
    vacuous = [v for v in verdicts if v.status == VACUOUS]
    assert vacuous[0].statement == "morphism-spectral-map-2"
    assert "duo" in vacuous[0].detail


def test_rational_profiles_mark_ideal_statements_unsupported():
    expected_unsupported = {
        "duo-transfer-1", "duo-transfer-2",
        "prime-radical-correspondence-1", "prime-radical-correspondence-2",
        "prime-maximal-discreteness",
    }
    for c in (divided_power(4, QQ), grouplike(3, QQ)):
        a = analyze(regular_bicomodule(c), mode="generated")
        verdicts = run_checks(a)
        assert profile(verdicts) == {PASS: 45, UNSUPPORTED: 5}
        unsupported = {v.statement for v in verdicts
                       if v.status == UNSUPPORTED}
        assert unsupported == expected_unsupported


def test_radical_statement_passes_over_q():
    a = analyze(regular_bicomodule(divided_power(3, QQ)), mode="generated")
    verdicts = {v.statement: v for v in run_checks(a)}
    assert verdicts["prime-radical-correspondence-3"].status == PASS
    assert verdicts["prime-radical-correspondence-4"].status == PASS


def test_name_filter_selects_a_single_family():
    a = analyze(regular_bicomodule(divided_power(2, F2)))
    verdicts = run_checks(a, names=["variety-identities"])
    assert verdicts
    assert all(v.statement.startswith("variety-identities")
               for v in verdicts)
    with pytest.raises(ValueError):
        run_checks(a, names=["no-such-statement"])


def test_uncertified_lattices_are_flagged_in_pass_details():
    a = analyze(regular_bicomodule(divided_power(3, QQ)), mode="generated")
    passes = [v for v in run_checks(a) if v.status == PASS]
    assert any("relative to the enumerated lattice" in v.detail
               for v in passes)


def test_random_sweep_produces_no_failures():
    total = Counter()
    for seed in range(12):
        m, desc = random_instance(seed + 40, field=F2)
        verdicts = run_checks(analyze(m))
        for v in verdicts:
            total[v.status] += 1
            assert v.status != FAIL, (desc, v.statement, v.detail, v.witness)
    assert total[PASS] > 300


def test_vacuous_verdicts_name_the_missing_hypothesis():
    for seed in range(12):
        m, _ = random_instance(seed + 40, field=F3)
        for v in run_checks(analyze(m)):
            if v.status == VACUOUS:
                assert "needs" in v.detail


def test_chain_inclusion_morphism_statements():
    theta = chain_inclusion(2, 4, F2)
    verdicts = {v.statement: v for v in morphism_checks(theta)}
    assert verdicts["morphism-spectral-map-1"].status == PASS
    assert verdicts["morphism-spectral-map-2"].status == PASS
    assert verdicts["morphism-spectral-map-3"].status == PASS
    assert verdicts["morphism-spectral-map-4"].status == PASS
    assert verdicts["morphism-spectral-map-5"].status == VACUOUS


def test_swap_automorphism_morphism_statements():
    theta = permutation_morphism(2, (1, 0), F2)
    verdicts = morphism_checks(theta)
    assert profile(verdicts) == {PASS: 5}


def test_verdict_serialization():
    v = Verdict("demo", FAIL, "broken", {"dim": 2})
    d = v.to_dict()
    assert d["statement"] == "demo"
    assert d["status"] == FAIL
    assert d["witness"] == {"dim": 2}
    assert v.failed
    assert not Verdict("demo", PASS, "ok").failed
