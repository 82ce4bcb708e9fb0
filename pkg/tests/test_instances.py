from itersocle.instances import (
    DEFAULT_SEED,
    SEED_ENV,
    random_hb_suite,
    random_ideal_suite,
    suite_seed,
)
from itersocle.groebner import origin_primary_check


def test_seed_resolution(monkeypatch):
    monkeypatch.delenv(SEED_ENV, raising=False)
    assert suite_seed() == DEFAULT_SEED
    monkeypatch.setenv(SEED_ENV, "17")
    assert suite_seed() == 17
    assert suite_seed(3) == 3


def test_suites_are_deterministic_and_valid():
    a = random_ideal_suite(6, seed=11)
    b = random_ideal_suite(6, seed=11)
    assert [x.ideal.gens for x in a] == [x.ideal.gens for x in b]
    assert all(origin_primary_check(x.ideal).ok for x in a)
    for _, phi, s in random_hb_suite(4, seed=11):
        assert all(not f or f.order() >= s for f in phi.entries())
