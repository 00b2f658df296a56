"""The ten headline claims, one test each, at their stated tolerances.

Each test prints its own pass/fail line so the suite output doubles as the
claims ledger.  These call the same criterion runners as `mwgap ledger`,
with the same pinned seeds.
"""

import time

from mwgap.acceptance import (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
)


def _report(criterion):
    t0 = time.time()
    res = criterion()
    res.seconds = time.time() - t0
    print(res.line())
    for d in res.details:
        print(f"    {d}")
    assert res.passed, "; ".join(res.details)


def test_criterion_1_canonical_lp_values_exact():
    _report(criterion_1)


def test_criterion_2_nonopposite_lower_bound_certified():
    _report(criterion_2)


def test_criterion_3_potential_checks():
    _report(criterion_3)


def test_criterion_4_oracle_agreement_tiny_scale():
    _report(criterion_4)


def test_criterion_5_normalization_property():
    _report(criterion_5)


def test_criterion_6_projection_propositions():
    _report(criterion_6)


def test_criterion_7_cost_lemmas_exact():
    _report(criterion_7)


def test_criterion_8_injection_restriction():
    _report(criterion_8)


def test_criterion_9_rounding_density():
    _report(criterion_9)


def test_criterion_10_lp_search_window():
    _report(criterion_10)
