"""Primitive-covering-number catalog, decision cache, conjecture checks."""

import json

import pytest

from covernum.cache import DecisionCache
from covernum.catalog import (
    admissible_ordering,
    enumerate_primitive,
    full_divisor_set_check,
)
from covernum.decide import decide_covering
from covernum.numtheory import factor
from covernum.systems import verify_cover


def test_catalog_to_fifteen():
    catalog = enumerate_primitive(15)
    assert catalog.values() == [12]
    tags = dict(catalog.provenance)
    assert tags[12] == "primitive"
    assert tags[13] == "density-filter"
    assert tags[11] == "density-filter"


def test_catalog_to_hundred():
    catalog = enumerate_primitive(100)
    assert catalog.values() == [12, 80, 90]
    for entry in catalog.entries:
        assert entry.ordering is not None
        assert verify_cover(entry.certificate).is_cover
        assert all(entry.n % d == 0 for d in entry.certificate.moduli)


def test_catalog_to_250_contains_210():
    catalog = enumerate_primitive(250)
    assert 210 in catalog.values()
    tags = dict(catalog.provenance)
    assert tags[24] == "covering"  # covering but 12 divides it


def test_catalog_entries_pairwise_non_dividing():
    values = enumerate_primitive(500).values()
    assert all(
        b % a for a in values for b in values if a != b
    )


def test_catalog_json_shape():
    data = json.loads(enumerate_primitive(100).to_json())
    assert data[0]["n"] == 12
    assert data[0]["factorization"] == [[2, 2], [3, 1]]
    assert data[0]["ordering"] == [2, 3]
    assert {c["n"] for c in data[0]["certificate"]["classes"]} == \
        {2, 3, 4, 6, 12}


def test_catalog_bound_validation():
    with pytest.raises(ValueError):
        enumerate_primitive(0)
    with pytest.raises(ValueError):
        enumerate_primitive(10**5)


def test_admissible_ordering():
    assert admissible_ordering(factor(12)) == (2, 3)
    assert admissible_ordering(factor(90)) == (2, 3, 5)
    assert admissible_ordering(factor(210)) == (2, 3, 5, 7)
    # prime powers never admit one
    assert admissible_ordering(factor(8)) is None
    assert admissible_ordering(factor(49)) is None
    assert admissible_ordering(factor(6)) is None


def test_full_divisor_set_check():
    assert full_divisor_set_check(12)
    assert not full_divisor_set_check(24)  # the 12-cover sits inside D_24
    with pytest.raises(ValueError):
        full_divisor_set_check(30)  # not a covering number


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = DecisionCache(path)
    assert cache.get(12) is None
    rec = decide_covering(12, cache=cache)
    rehydrated = DecisionCache(path).get(12)
    assert rehydrated == rec
    assert rehydrated.certificate == rec.certificate
    not_cover = decide_covering(30, cache=cache)
    again = DecisionCache(path).get(30)
    assert again.rejection == "search-exhausted" and again == not_cover


def test_cache_put_is_idempotent(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = DecisionCache(path)
    decide_covering(12, cache=cache)
    before = path.read_bytes()
    decide_covering(12, cache=cache)
    decide_covering(12, cache=DecisionCache(path))
    assert path.read_bytes() == before


def test_warm_cache_catalog_identical(tmp_path):
    path = tmp_path / "cache.jsonl"
    cold = enumerate_primitive(120, cache=DecisionCache(path))
    warm = enumerate_primitive(120, cache=DecisionCache(path))
    assert cold.to_json() == warm.to_json()
    assert cold.provenance == warm.provenance
