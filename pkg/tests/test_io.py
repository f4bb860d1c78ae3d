import hashlib
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import FIXTURE, FULL2, GOLDEN, cylfns, fixture_data, fixture_path, points
from markovcoe.coe import transducer_from_json
from markovcoe.cylfn import CylFn
from markovcoe.errors import NotStochastic, SchemaError, ValidationError
from markovcoe.io import dumps, load_cylfn, load_measure, load_point, load_space, load_spec, parse_rational, read_json


def test_read_json_digest():
    data, digest = read_json(fixture_path("c1.json"))
    raw = open(fixture_path("c1.json"), "rb").read()
    assert data == json.loads(raw) and digest == hashlib.sha256(raw).hexdigest()


def test_load_space_forms():
    assert load_space({"n": 2, "rows": [[1, 1], [1, 0]]}) == GOLDEN
    assert load_space([[1, 1], [1, 1]]) == FULL2
    with pytest.raises(SchemaError):
        load_space({"n": 3, "rows": [[1, 1], [1, 0]]})
    with pytest.raises(ValidationError):
        load_space({"rows": [[1, 2], [1, 0]]})


def test_load_cylfn():
    assert load_cylfn(FULL2, fixture_data("c1.json")) == FIXTURE.c1
    assert load_cylfn(FULL2, {"depth": 0, "table": {"": 4}}) == CylFn.constant(FULL2, 4)
    with pytest.raises(SchemaError):
        load_cylfn(GOLDEN, {"depth": 1, "table": {"1": 1}})
    with pytest.raises(SchemaError):
        load_cylfn(FULL2, {"depth": 1})


def test_load_point_normalizes():
    x = load_point(FULL2, {"transient": [1], "cycle": [2, 1]})
    assert x.transient == () and x.cycle == (1, 2)
    with pytest.raises(SchemaError):
        load_point(FULL2, {"transient": [1]})


def test_load_measure():
    mu = load_measure(FULL2, fixture_data("bernoulli_half.json"))
    assert mu.pi == (Fraction(1, 2), Fraction(1, 2))
    mu = load_measure(GOLDEN, {"P": [["1/2", "1/2"], [1, 0]]})
    assert mu.pi == (Fraction(2, 3), Fraction(1, 3))
    with pytest.raises(NotStochastic):
        load_measure(FULL2, {"P": [["1/2", "1/3"], ["1/2", "1/2"]]})
    with pytest.raises(SchemaError):
        load_measure(FULL2, {"P": [["x", "1"], ["1/2", "1/2"]]})
    assert parse_rational(" 3 / 4 ") == Fraction(3, 4)


def test_spec_round_trip():
    again = load_spec(json.loads(json.dumps(FIXTURE.to_json())))
    assert again.c1 == FIXTURE.c1 and again.c2 == FIXTURE.c2
    assert again.h.rules == FIXTURE.h.rules and again.hinv.rules == FIXTURE.hinv.rules


def test_spec_schema_errors():
    data = fixture_data("fixture_coe.json")
    del data["hinv"]
    with pytest.raises(SchemaError):
        load_spec(data)
    data = fixture_data("fixture_coe.json")
    data["h"]["rules"][0]["input"] = "one"
    with pytest.raises(SchemaError):
        load_spec(data)


def test_transducer_json_round_trip():
    T = transducer_from_json(GOLDEN, FULL2, FIXTURE.hinv.to_json())
    assert T.rules == FIXTURE.hinv.rules and T.initial == FIXTURE.hinv.initial


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_cylfn_and_point_json_round_trip(data):
    S = data.draw(st.sampled_from([FULL2, GOLDEN]))
    f = data.draw(cylfns(S, max_depth=3))
    assert load_cylfn(S, json.loads(dumps(f.to_json()))) == f
    x = data.draw(points(S))
    assert load_point(S, json.loads(dumps(x.to_json()))) == x


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
