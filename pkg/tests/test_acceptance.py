"""Acceptance suite: one check per claimed result, one verdict line each.

Budgets are wall-clock ceilings for the checks that carry one; the rest
only need to pass.
"""

import time

from spatialgraphs.claims import run_claim


def check(claim_id, budget_s=None):
    start = time.monotonic()
    ok, evidence = run_claim(claim_id, seed=0)
    elapsed = time.monotonic() - start
    print(f"{'PASS' if ok else 'FAIL'} {claim_id} ({elapsed:.1f}s)")
    assert ok, (claim_id, evidence)
    if budget_s is not None:
        assert elapsed < budget_s, (claim_id, elapsed, budget_s)


def test_01_petersen_family():
    check("petersen-family", budget_s=1)


def test_02_heawood_family():
    check("heawood-family", budget_s=10)


def test_03_k3311_counts():
    check("k3311-counts", budget_s=60)


def test_04_theorem1_equivalence():
    check("theorem1-equivalence", budget_s=30)


def test_05_prop24_phi():
    check("prop24-phi")


def test_06_minor_scripts():
    check("minor-scripts")


def test_07_apex_proper_minors():
    check("apex-proper-minors", budget_s=300)


def test_08_c14_identification():
    check("c14-identification")


def test_09_invariant_oracle():
    check("invariant-oracle")


def test_10_conway_gordon():
    check("conway-gordon", budget_s=180)


def test_11_petersen_lk():
    check("petersen-lk")


def test_12_d4_lemma():
    check("d4-lemma")


def test_13_n9fn_dichotomy():
    check("n9fn-dichotomy", budget_s=180)
