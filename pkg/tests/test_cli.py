import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rieszcover import cli
from rieszcover.fixtures import FIXTURES, k4_space_file, run_fixtures
from rieszcover.io import SpecError, load_space_obj, parse_args
from rieszcover.report import Report

DEMO_K4 = Path(__file__).resolve().parents[1] / "demos" / "data" / "k4.json"


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.json"
    p.write_text(json.dumps(k4_space_file()))
    return p


def run_json(capsys, *argv):
    code = cli.main([*argv, "--report", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_demo_k4_file_matches_dump():
    assert json.loads(DEMO_K4.read_text()) == k4_space_file()


def test_embed_v2(k4_file, capsys):
    code, rep = run_json(capsys, "run", "--space", str(k4_file), "--op", "embed", "--arg", "x=v2")
    assert code == 0 and rep["result"] == ["0", "0", "2", "2"]


def test_order_dense_negative_answer_exits_2_with_witness(k4_file, capsys):
    argv = ["run", "--space", str(k4_file), "--op", "order-dense", "--arg", "L=image:ideal:v1,v4", "--arg", "J=ext-ideal:v1,v4"]
    code, rep = run_json(capsys, *argv)
    assert code == 2 and rep["result"] is False and rep["witness"]
    code, rep = run_json(capsys, *argv, "--arg", "y=1,0,1,0")
    assert code == 2 and rep["witness"] == ["1", "0", "1", "0"]


def test_positive_answers_exit_0(k4_file, capsys):
    code, rep = run_json(capsys, "run", "--space", str(k4_file), "--op", "majorizing", "--arg", "L=image:span:v2", "--arg", "J=coords:3,4")
    assert code == 0 and rep["result"] is True
    code, rep = run_json(capsys, "run", "--space", str(k4_file), "--op", "extension-band", "--args", '{"S": "v1,v4"}')
    assert code == 0


def test_empty_band_is_reported_as_empty_basis(k4_file, capsys):
    code, rep = run_json(capsys, "run", "--space", str(k4_file), "--op", "band", "--args", '{"S": []}')
    assert code == 0
    assert rep["result"]["basis"] == []


def test_function_ops_through_carrier(tmp_path, capsys):
    f = tmp_path / "fns.json"
    f.write_text(json.dumps({
        "domain": ["0", "1"],
        "functions": {"g": {"domain": ["0", "1"], "breakpoints": ["0", "1/2", "1"], "pieces": [["0"], ["-1/2", "1"]]}},
        "descriptors": {"B": {"zero_set": [["0", "1/2"]]}},
    }))
    code, rep = run_json(capsys, "run", "--carrier", "C1PP2", "--in", str(f), "--op", "majorized", "--arg", "g=g", "--arg", "D=B")
    assert code == 2 and rep["witness"]["kind"] == "expansion"
    code, rep = run_json(capsys, "run", "--carrier", "PP2", "--in", str(f), "--op", "majorized", "--arg", "g=g", "--arg", "D=B")
    assert code == 0


def test_unknown_op_and_missing_source_exit_1(k4_file, capsys):
    assert cli.main(["run", "--space", str(k4_file), "--op", "frobnicate"]) == 1
    assert "unknown op" in capsys.readouterr().err
    assert cli.main(["run", "--op", "embed"]) == 1
    assert cli.main(["run", "--space", str(k4_file), "--op", "embed"]) == 1
    assert "missing argument 'x'" in capsys.readouterr().err


def test_flipped_ray_makes_the_cone_contain_a_line(tmp_path, capsys):
    obj = k4_space_file()
    obj["cone"]["generators"][2] = ["-1", "0", "-1"]  # v3 replaced by -v1
    del obj["functionals"]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(obj))
    assert cli.main(["run", "--space", str(p), "--op", "space"]) == 1
    assert "line" in capsys.readouterr().err


def test_spec_errors_carry_location(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text('{"kind": "fd",\n "dim": 3,, }')
    assert cli.main(["run", "--space", str(p), "--op", "space"]) == 1
    assert "line 2 column" in capsys.readouterr().err

    obj = k4_space_file()
    obj["cone"]["generators"][1][0] = "x/2"
    with pytest.raises(SpecError) as info:
        load_space_obj(obj)
    assert info.value.where == "cone.generators[1][0]"

    with pytest.raises(SpecError):
        load_space_obj({"kind": "nope"})
    with pytest.raises(SpecError):
        parse_args("[1, 2]")
    with pytest.raises(SpecError):
        parse_args(None, ["novalue"])


def test_floats_are_rejected_in_space_files():
    obj = k4_space_file()
    obj["cone"]["generators"][0] = [1.0, 0, 1]
    with pytest.raises(SpecError):
        load_space_obj(obj)


def test_fixtures_command(capsys):
    assert cli.main(["fixtures"]) == 0
    assert "6/6 fixtures passed" in capsys.readouterr().err
    assert cli.main(["fixtures", "nope"]) == 1


def test_empty_fixture_registry_is_an_error():
    with pytest.raises(LookupError):
        run_fixtures(registry={})


def test_crashing_fixture_is_reported_not_raised():
    def boom():
        raise RuntimeError("kaput")

    (rep,) = run_fixtures(registry={"boom": boom})
    assert not rep.ok and "kaput" in rep.notes[0]


def test_every_fixture_passes():
    reports = run_fixtures()
    assert [r.op for r in reports] == [f"fixture:{n}" for n in FIXTURES]
    assert all(r.ok for r in reports), [r.text() for r in reports if not r.ok]


def test_properties_command_echoes_seed(capsys):
    code, rep = run_json(capsys, "properties", "--seed", "5", "--trials", "2", "--func-trials", "2")
    assert code == 0
    assert rep["inputs"] == {"seed": "5", "trials": "2", "func_trials": "2"}


def test_properties_are_replayable():
    from rieszcover.properties import properties

    assert properties(3, 2, 2).to_json() == properties(3, 2, 2).to_json()


def test_text_report_renders_checks(capsys):
    assert cli.main(["fixtures", "k4_ideal_order_density"]) == 0
    out = capsys.readouterr().out
    assert "PASS fixture:k4_ideal_order_density" in out and "[ok  ] inf of upper set at z: (1,2,1,0)" in out


# -- report round trip -------------------------------------------------------------------

json_leaf = st.one_of(st.booleans(), st.none(), st.text(max_size=5), st.fractions(max_denominator=20).map(lambda x: f"{x.numerator}/{x.denominator}" if x.denominator > 1 else str(x.numerator)))
json_value = st.recursive(json_leaf, lambda kids: st.one_of(st.lists(kids, max_size=3), st.dictionaries(st.text(max_size=4), kids, max_size=3)), max_leaves=10)


@given(st.text(min_size=1, max_size=8), json_value, json_value, json_value, st.booleans(), st.lists(st.text(max_size=6), max_size=2))
def test_report_round_trip(op, inputs, result, witness, ok, notes):
    r = Report(op, inputs if isinstance(inputs, dict) else {"x": inputs}, result, witness, ok, notes)
    assert Report.loads(r.dumps()) == r


def test_fixture_reports_round_trip():
    for r in run_fixtures():
        assert Report.loads(r.dumps()) == r
