import json

import pytest
from hypothesis import given, strategies as st

from conftest import double_cm, h4_q, kG
from qtwogroup import GF, QQ, cyclic, symmetric
from qtwogroup import io
from qtwogroup.constructions import GradedCrossedModuleInput, sweedler_h4
from qtwogroup.report import CheckReport


def test_algebra_round_trip():
    for H in (kG("S3"), sweedler_h4(QQ).materialized(), kG(3, GF(101))):
        obj = io.algebra_to_json(H)
        back = io.parse_algebra(json.loads(io.dumps(obj)))
        assert back == H and back.field == H.field


def test_action_and_map_round_trip():
    cm = double_cm(2)
    act = io.parse_action(io.action_to_json(cm.action), cm.H)
    assert act.act == cm.action.act
    assert io.parse_dmap(io.map_to_json(cm.d)) == cm.d


def test_coaction_and_element_round_trip():
    from qtwogroup.hopf import regular_coaction

    H = kG(3)
    c = io.parse_coaction(io.coaction_to_json(regular_coaction(H)), H)
    assert c.coact == H.comul
    q = h4_q()
    R, dims = io.parse_element(io.element_to_json(q.R, (4, 4), QQ))
    assert R == q.R and dims == (4, 4)


def test_group_and_graded_round_trip():
    S3 = symmetric(3)
    assert io.parse_cayley(io.group_to_json(S3)).table == S3.table
    inp = GradedCrossedModuleInput(cyclic(3), cyclic(2), ((0, 1, 2), (0, 2, 1)), (0, 0), name="g")
    back = io.parse_graded(io.graded_to_json(inp))
    assert back.M.table == inp.M.table and back.action == inp.action and back.dhat == inp.dhat


def test_zero_denominator_names_the_entry(tmp_path):
    obj = io.algebra_to_json(kG(2))
    obj["mul"][0][-1] = "1/0"
    p = io.write_json(tmp_path / "bad.json", obj)
    with pytest.raises(io.ParseError) as err:
        io.parse_algebra(p)
    msg = str(err.value)
    assert "bad.json" in msg and "mul[0]" in msg and "1/0" in msg


@pytest.mark.parametrize(
    "mutate, fragment",
    [
        (lambda o: o.pop("dim"), "missing field 'dim'"),
        (lambda o: o.__setitem__("format", "map"), "expected format"),
        (lambda o: o["mul"][0].__setitem__(0, 99), "out of range"),
        (lambda o: o["unit"][0].__setitem__(1, 1), "scalar must be a string"),
        (lambda o: o.__setitem__("field", "Fp:4"), "field"),
    ],
)
def test_malformed_input(mutate, fragment):
    obj = io.algebra_to_json(kG(2))
    mutate(obj)
    with pytest.raises(io.ParseError, match=fragment):
        io.parse_algebra(obj)


def test_invalid_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(io.ParseError, match="invalid JSON"):
        io.load_json(p)


def test_validation_reports_failures():
    obj = io.algebra_to_json(kG(2))
    obj["antipode"] = [[0, 0, "1"], [1, 1, "2"]]
    with pytest.raises(io.ValidationError) as err:
        io.parse_algebra(obj)
    assert not err.value.report.passed
    io.parse_algebra(obj, validate=False)


def test_repeated_entries_add():
    obj = io.algebra_to_json(kG(2))
    obj["counit"] = [[0, "1/2"], [0, "1/2"], [1, "1"]]
    H = io.parse_algebra(obj)
    assert H.counit == kG(2).counit


def test_field_override():
    H = io.parse_algebra(io.algebra_to_json(kG(2)), field=GF(7))
    assert H.field == GF(7)


@given(st.dictionaries(st.integers(0, 8), st.fractions().filter(bool), max_size=6))
def test_element_round_trip_property(v):
    back, dims = io.parse_element(io.element_to_json(v, (3, 3), QQ))
    assert back == {k: QQ(x) for k, x in v.items()}


def test_certificate_is_deterministic(tmp_path):
    p = io.write_json(tmp_path / "H.json", io.algebra_to_json(kG(2)))
    rep = CheckReport("t")
    rep.flag("ok", True)
    a = io.dumps(io.certificate("hopf", QQ, {"H": p}, rep))
    b = io.dumps(io.certificate("hopf", QQ, {"H": p}, rep))
    assert a == b
    cert = json.loads(a)
    assert cert["inputs"]["H"]["sha256"] == io.file_digest(p) and cert["verdict"] == "pass"
