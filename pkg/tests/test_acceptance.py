"""Acceptance suite: every criterion at its stated tolerance (exact equality
everywhere) and runtime budget.  The terminal summary prints one PASS/FAIL
line per criterion (see conftest.py)."""

import json
import time
from fractions import Fraction
from math import factorial

import pytest

from abtaut import (
    bernoulli,
    borel_serre_check,
    boundary_constant,
    build_ring,
    consistency_report,
    determinant,
    grr_coefficient,
    leading_stratum_constants,
    named_series,
    p_rank_constant,
    pushforward,
    recursion_check,
    stratum_constant,
    sum_powers_quotient,
    zeta_negative_odd,
)
from abtaut.cli import main


@pytest.mark.criterion(1, "constants 1/12, 1/120, 1/252 from the CLI")
def test_criterion_1_constants(capsys):
    expected = {1: "1/12", 2: "1/120", 3: "1/252"}
    started = time.perf_counter()
    for g, value in expected.items():
        code = main(["constant", "--g", str(g)])
        assert code == 0
        out = capsys.readouterr().out
        payload = json.loads(out)["payload"]
        assert payload["value"] == value, (g, payload)
    elapsed = time.perf_counter() - started
    assert elapsed < 0.010, f"constants took {elapsed * 1000:.2f} ms (budget 10 ms)"


@pytest.mark.criterion(2, "pushforward pipeline magnitudes for g <= 20")
def test_criterion_2_grr_pipeline():
    started = time.perf_counter()
    sign_report = []
    for g in range(1, 21):
        for k in range(1, g):
            assert pushforward(g, sum_powers_quotient(k)).delta_coefficient == 0, (g, k)
        matched = sum_powers_quotient(g).poly
        for exps, coeff in matched.terms.items():
            if exps[1] >= 1:
                mono = matched.ring.monomial(exps, coeff)
                assert pushforward(g, mono).delta_coefficient == 0, (g, exps)
        assert matched.coefficient((2 * g - 2, 0)) == 2 * g - 1, g
        q = grr_coefficient(g)
        assert abs(q) == boundary_constant(g), g
        sign_report.append(
            {
                "g": g,
                "q": str(q),
                "matches_zeta": q == zeta_negative_odd(g),
                "matches_theorem_sign": q == boundary_constant(g),
            }
        )
    elapsed = time.perf_counter() - started
    for row in sign_report:
        print(row)
    assert elapsed < 1.0, f"pipeline took {elapsed:.3f} s (budget 1 s)"


@pytest.mark.criterion(3, "tautological ring structure for g <= 6")
def test_criterion_3_ring_structure():
    started = time.perf_counter()
    for g in range(1, 7):
        ring = build_ring(g)
        dims = ring.dimension_profile()
        assert sum(dims) == 2 ** g, g
        assert dims == dims[::-1], g
        assert ring.socle_degree == g * (g + 1) // 2
        assert dims[-1] == 1, g
        assert not ring.normal_form(ring.ring.gen(g - 1) ** 2), g
        product = ring.ring.one
        for part in ring.relation_components.values():
            product = product + part
        assert ring.normal_form(product) == ring.normal_form(ring.ring.one), g
        for d in range(ring.socle_degree + 1):
            assert determinant(ring.pairing_matrix(d)) != 0, (g, d)
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"ring checks took {elapsed:.3f} s (budget 10 s)"


@pytest.mark.criterion(4, "hand-oracle reductions")
def test_criterion_4_hand_oracles():
    started = time.perf_counter()
    r2 = build_ring(2)
    assert str(r2.normal_form(r2.ring.parse("l1^2"))) == "2*l2"
    assert r2.socle_ratio(r2.ring.parse("l1^3")) == 2
    r3 = build_ring(3)
    assert r3.socle_ratio(r3.ring.parse("l1^6")) == 16
    r4 = build_ring(4)
    assert r4.socle_ratio(r4.ring.parse("l4*l3*l1^3")) == 2
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"hand oracles took {elapsed:.3f} s (budget 1 s)"


@pytest.mark.criterion(5, "two-route exterior-power identity for g <= 5")
def test_criterion_5_borel_serre():
    started = time.perf_counter()
    for g in range(1, 6):
        report = borel_serre_check(g)
        assert report.ok, (g, str(report.difference))
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0, f"two-route checks took {elapsed:.3f} s (budget 60 s)"


@pytest.mark.criterion(6, "dual Todd series coefficients B_k/k! for k <= 20")
def test_criterion_6_todd_series():
    started = time.perf_counter()
    series = named_series("todd_dual_gen", 20)
    for k in range(21):
        assert series[k] == bernoulli(k) / factorial(k), k
    elapsed = time.perf_counter() - started
    assert elapsed < 0.010, f"series took {elapsed * 1000:.2f} ms (budget 10 ms)"


@pytest.mark.criterion(7, "stratum-class constants and their consistency")
def test_criterion_7_satake_constants():
    started = time.perf_counter()
    assert p_rank_constant(3, 2) == 21
    for p in (2, 3, 5):
        for g in range(1, 11):
            expected = 1
            power = 1
            for j in range(1, g + 1):
                power *= p
                expected *= power - 1
            assert p_rank_constant(g, p) == expected, (g, p)
    first, second = leading_stratum_constants(2)
    assert (first.coefficient, second.coefficient) == (120, -1440)
    for g in range(2, 13):
        assert stratum_constant(g, 2).coefficient == leading_stratum_constants(g)[1].coefficient, g
    for g in range(1, 13):
        assert recursion_check(g).ok, g
    for g in range(2, 13):
        report = consistency_report(g)
        comparison = {c.stratum_index: c for c in report.comparisons}[1]
        if g % 2 == 0:
            assert not comparison.equal and comparison.factor == -1, g
        else:
            assert comparison.equal, g
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"stratum constants took {elapsed:.3f} s (budget 1 s)"


@pytest.mark.criterion(8, "substituted acceptance basis for non-reproducible geometry")
def test_criterion_8_substituted_basis_note():
    """The geometric content (cycle relations on moduli stacks, p-rank loci as
    varieties, stack multiplicities) is not reproducible at desk scale; the
    accepted substitute is exact constant reproduction, dual-route oracle
    equivalence, and vanishing/structure invariants, all exercised above.
    This test re-runs one miniature instance of each pillar."""
    assert grr_coefficient(2) == Fraction(1, 120)  # constant reproduction
    assert borel_serre_check(2).ok  # dual-route equivalence
    ring = build_ring(2)
    assert not ring.normal_form(ring.ring.parse("l2^2"))  # vanishing invariant
