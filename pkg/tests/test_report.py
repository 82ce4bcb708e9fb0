import json

import pytest

from conftest import P
from itersocle.report import COMPUTED, FAIL, PASS, Report, canonical_generators, format_generators


def test_fail_requires_witness():
    with pytest.raises(ValueError):
        Report("x", FAIL, {})
    with pytest.raises(ValueError):
        Report("x", "MAYBE", {})
    assert Report("x", FAIL, {}, ["w"]).status == FAIL


def test_json_schema():
    r = Report("reduction_one", PASS, {"s": 1}, [], "verify reduction f --s 1")
    data = json.loads(r.to_json())
    assert set(data) == {"command", "claim", "status", "payload", "witnesses"}


def test_canonical_generators():
    gens = [P("2*y^3"), P("x^2 + x*y"), P("-x"), P("y^3")]
    assert format_generators(gens) == ["x", "x^2 + x*y", "y^3"]
    assert all(g.lead_coefficient() == 1 for g in canonical_generators(gens))
    assert Report("c", COMPUTED).ok
