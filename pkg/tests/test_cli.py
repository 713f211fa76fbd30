import json

import pytest

from app.cli.main import dispatch, parse_arguments


def _run(capsys, *argv):
    status = dispatch(list(argv))
    return status, capsys.readouterr().out


def test_catalog_terms(capsys):
    status, out = _run(capsys, "catalog", "terms", "bell-touchard", "--x", "1", "--n", "7")
    assert status == 0
    assert json.loads(out) == ["1", "1", "2", "5", "15", "52", "203"]


def test_catalog_terms_with_a_negative_parameter(capsys):
    status, out = _run(capsys, "catalog", "terms", "bell-touchard", "--x=-1", "--n", "5")
    assert status == 0
    assert json.loads(out) == ["1", "-1", "0", "1", "1"]


def test_catalog_list(capsys):
    status, out = _run(capsys, "catalog", "list")
    entries = json.loads(out)
    assert status == 0
    assert len(entries) == 16
    assert {"name", "title", "provenance", "parameters", "symbolic_x", "beta", "order"} <= set(entries[0])


def test_catalog_verify_and_loci(capsys):
    status, out = _run(capsys, "catalog", "verify", "bernoulli", "--x", "symbolic", "--order", "10")
    assert status == 0
    assert json.loads(out) == {"status": "exact", "order": 10, "first_failing_order": None}
    status, out = _run(capsys, "catalog", "loci", "fubini")
    assert json.loads(out)["singular_x"] == ["-1"]


def test_derive(tmp_path, capsys):
    egf = tmp_path / "bell.json"
    egf.write_text(
        json.dumps({"lambda": "1", "lhs": [{"i": 0, "u_poly": ["0", "-1"]}, {"i": 1, "u_poly": ["1"]}], "init": ["1"]}),
        encoding="utf-8",
    )
    status, out = _run(capsys, "derive", "--egf", str(egf), "--verify-order", "16")
    assert status == 0
    payload = json.loads(out)
    assert payload["coeffs"][0] == {"var": "t", "num": [["0", "0"], ["-1", "0"]], "den": [["1", "0"]]}
    assert payload["rhs"]["num"] == [["1", "0"]]


def test_certify_entry(capsys):
    status, out = _run(capsys, "certify", "--entry", "bell-touchard", "--x", "1", "--order", "32")
    assert status == 0
    cert = json.loads(out)
    assert cert["verdict"] == "strongly-d-transcendental"
    assert cert["evidence"]["kind"] == "no-rational-solution"
    assert cert["series_prefix"][:4] == ["1", "1", "2", "5"]


def test_certify_files_with_a_two_fixed_point_shift(tmp_path, capsys):
    equation = tmp_path / "eq.json"
    series = tmp_path / "w.json"
    equation.write_text(
        json.dumps({"shift": {"alpha": "2", "beta": "1"}, "coeffs": [{"num": ["0", "-1"]}, {"num": ["1"]}]}),
        encoding="utf-8",
    )
    series.write_text(json.dumps({"coeffs": ["1", "1", "2", "5"]}), encoding="utf-8")
    status, out = _run(capsys, "certify", "--equation", str(equation), "--series", str(series))
    assert status == 0
    assert json.loads(out)["verdict"] == "unsupported"


def test_certify_needs_inputs(capsys):
    status, out = _run(capsys, "certify")
    assert status == 1
    assert json.loads(out)["error"]["code"] == "invalid-input"


def test_unknown_entry_is_a_domain_error(capsys):
    status, out = _run(capsys, "catalog", "terms", "no-such-family")
    assert status == 1
    assert json.loads(out)["error"]["code"] == "unknown-entry"


def test_singular_parameter(capsys):
    status, out = _run(capsys, "catalog", "terms", "fubini", "--x=-1")
    assert status == 1
    assert json.loads(out)["error"]["code"] == "singular-parameter"


def test_usage_errors_exit_with_two(capsys):
    assert dispatch(["catalog", "terms"]) == 2
    assert dispatch(["no-such-command"]) == 2


def test_out_writes_a_file(tmp_path, capsys):
    target = tmp_path / "terms.json"
    status, out = _run(capsys, "catalog", "terms", "fubini", "--x", "1", "--n", "4", "--out", str(target))
    assert status == 0 and out == ""
    assert json.loads(target.read_text(encoding="utf-8")) == ["1", "1", "3", "13"]


def test_summation_commands(tmp_path, capsys):
    t = tmp_path / "t.json"
    one = tmp_path / "one.json"
    t.write_text(json.dumps({"num": ["0", "1"]}), encoding="utf-8")
    one.write_text(json.dumps({"num": ["1"]}), encoding="utf-8")
    status, out = _run(capsys, "summable", "--h", str(t))
    assert status == 0
    assert json.loads(out)["result"] == "none"
    status, out = _run(capsys, "telescope", "--f", str(t), "--nmax", "2", "--beta", "i")
    assert json.loads(out) == {"result": "none", "checked_n": 2, "n": None, "alphas": [], "g": None}
    status, out = _run(capsys, "ratsolve", "--a", str(t), "--f", str(one))
    assert status == 0
    assert json.loads(out)["result"] == "none"


def test_numeric_trigamma(capsys):
    status, out = _run(capsys, "numeric", "trigamma", "--z", "1")
    assert status == 0
    value = json.loads(out)["values"]["trigamma"][0]
    assert value == pytest.approx(1.6449340668482264, rel=1e-12)


def test_numeric_negative_control_fails(capsys):
    status, out = _run(capsys, "numeric", "check-bernoulli-solution", "--negate-rhs")
    assert status == 1
    assert json.loads(out)["passed"] is False


def test_global_flags_survive_the_subcommand():
    args = parse_arguments(["--order", "12", "--pretty", "catalog", "list"])
    assert args.order == 12 and args.pretty
    args = parse_arguments(["catalog", "list", "--order", "9"])
    assert args.order == 9 and not args.pretty
    args = parse_arguments(["--order", "12", "catalog", "terms", "fubini", "--order", "9"])
    assert args.order == 9 and args.out is None
