"""Decision pipeline: filters, certificates, minimal-cover enumeration."""

from fractions import Fraction

import pytest

from covernum.decide import (
    DecisionRecord,
    SearchBudget,
    decide_covering,
    density_filter,
    divisor_count_bound_holds,
    enumerate_minimal_covers,
    is_primitive_covering,
    totient_filter,
    znam_simpson_holds,
)
from covernum.numtheory import divisors, factor, mycielski, sigma
from covernum.systems import CoverSystem, verify_cover


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(max_seconds=-1)


def test_density_filter_values():
    assert sigma(12) == 28  # >= 2*12 + 1
    assert density_filter(12)
    assert not density_filter(7)
    assert not density_filter(15)


def test_totient_filter_values():
    # composite divisors of 70: 10, 14, 35, 70 ->
    # 1/4 + 1/6 + 1/24 + 1/24 = 1/2 < 1
    assert not totient_filter(70)
    assert totient_filter(12)


def test_twelve_is_smallest_covering():
    for n in range(2, 12):
        assert not decide_covering(n).is_covering
    rec = decide_covering(12)
    assert rec.is_covering
    assert verify_cover(rec.certificate).is_cover
    assert all(12 % d == 0 and d > 1 for d in rec.certificate.moduli)


def test_rejection_tags():
    assert decide_covering(7).rejection == "density-filter"
    assert decide_covering(70).rejection == "totient-filter"
    assert decide_covering(30).rejection == "search-exhausted"
    assert decide_covering(140).rejection == "divisor-count-filter"
    assert decide_covering(700).rejection == "projection-filter"


def test_certificates_are_canonical_and_valid():
    for n in (12, 24, 60, 90, 120, 210, 280):
        rec = decide_covering(n)
        assert rec.is_covering
        cert = rec.certificate
        assert cert == cert.canonical()
        moduli = cert.moduli
        assert len(set(moduli)) == len(moduli)
        assert all(d > 1 and n % d == 0 for d in moduli)
        assert verify_cover(cert).is_cover


def test_input_validation():
    with pytest.raises(ValueError):
        decide_covering(1)
    with pytest.raises(ValueError):
        decide_covering(2**31 + 1)


def test_primitive_examples():
    assert is_primitive_covering(12)
    assert is_primitive_covering(90)
    assert not is_primitive_covering(24)  # 12 divides it
    assert not is_primitive_covering(30)  # not covering at all


def test_divisor_count_bound():
    # 140 = 2^2*5*7: not covering, consistent with 20 having < 7 divisors
    assert divisor_count_bound_holds(factor(140))
    assert divisor_count_bound_holds(factor(12))
    assert divisor_count_bound_holds(factor(210))
    assert divisor_count_bound_holds(factor(1))


def test_enumerate_minimal_twelve():
    pool = [d for d in divisors(12) if d > 1]
    covers = enumerate_minimal_covers(pool, 12)
    assert len(covers) == 24
    for cover in covers:
        assert cover.k == 5
        assert sorted(cover.moduli) == [2, 3, 4, 6, 12]
        report = verify_cover(cover)
        assert report.is_cover and report.is_minimal


def test_enumerate_minimal_validates_pool():
    with pytest.raises(ValueError):
        enumerate_minimal_covers([1, 2, 3], 12)
    with pytest.raises(ValueError):
        enumerate_minimal_covers([2, 5], 12)


def test_znam_simpson():
    erdos = CoverSystem.of([(0, 2), (0, 3), (1, 4), (5, 6), (7, 12)])
    assert znam_simpson_holds(erdos)
    assert erdos.k == 1 + mycielski(12)  # tight at 12
    with pytest.raises(ValueError):
        znam_simpson_holds(CoverSystem.of([(0, 2), (1, 2)]))  # repeated
    with pytest.raises(ValueError):
        znam_simpson_holds(CoverSystem.of([(0, 2)]))  # not a cover


def test_records_compare_by_outcome():
    a = DecisionRecord(12, True, None, None, nodes_explored=5, elapsed=0.1)
    b = DecisionRecord(12, True, None, None, nodes_explored=9, elapsed=0.2)
    assert a == b
