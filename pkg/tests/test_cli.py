import json

from yagita.cli import main
from yagita.witness import build_extraspecial_monomial


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_compute(capsys):
    code, out = run(capsys, "compute", "--prime", "3", "--n", "9", "--ring", "Z")
    assert code == 0 and out.strip() == "12"


def test_compute_json(capsys):
    code, out = run(capsys, "compute", "--prime", "2", "--n", "4", "--ring", "Z", "--json")
    assert code == 0 and json.loads(out) == {"value": "8"}


def test_compute_sl_ambiguous(capsys):
    code, out = run(capsys, "compute", "--prime", "2", "--n", "2", "--ring", "Z", "--sl")
    assert code == 0 and "4 or 2" in out


def test_witness_q8_json(capsys):
    code, out = run(capsys, "witness", "--kind", "q8", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["verification"]["verified"] is True
    assert len(blob["elements"]) == 8
    assert len(blob["generators"]) == 2
    assert blob["expected_order"] == "8"


def test_witness_g1(capsys):
    code, out = run(capsys, "witness", "--kind", "g1:3:2", "--ring", "Z")
    assert code == 0 and "order: 6" in out


def test_witness_extraspecial_over_z(capsys):
    code, out = run(capsys, "witness", "--kind", "e:3:1", "--ring", "Z", "--json")
    blob = json.loads(out)
    assert code == 0 and blob["dimension"] == "6"


def test_chern_subcommand(tmp_path, capsys):
    w = build_extraspecial_monomial(3, 1)
    z1 = w.generators[1]  # diagonal of zeta_3 powers
    f = tmp_path / "m.json"
    f.write_text(json.dumps(z1.to_json()), encoding="utf-8")
    code, out = run(capsys, "chern", "--matrix-file", str(f), "--prime", "3", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["exponents"] == {"0": "1", "1": "1", "2": "1"}
    assert blob["n_upper"] == "2"


def test_verify_exit_codes(capsys):
    code, out = run(capsys, "verify", "--prime", "3", "--n", "2", "--ring", "Z")
    assert code == 0 and "Pass" in out
    code, _ = run(capsys, "verify", "--prime", "5", "--n", "4", "--ring", "Z", "--sl")
    assert code == 2
    code, _ = run(capsys, "verify", "--prime", "2", "--n", "2", "--ring", "Z", "--sl")
    assert code == 3


def test_verify_json_parses(capsys):
    code, out = run(capsys, "verify", "--prime", "2", "--n", "4", "--ring", "Z", "--json")
    blob = json.loads(out)
    assert code == 0 and blob["verdict"] == "Pass" and blob["formula_value"] == "8"


def test_table(capsys):
    code, out = run(capsys, "table", "--prime", "2", "--ring", "Z", "--n-max", "4")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "n\tGL\tSL"
    assert [l.split("\t")[1] for l in lines[1:]] == ["2", "4", "4", "8"]


def test_prop6_random_deterministic(capsys):
    code1, out1 = run(capsys, "prop6", "--prime", "5", "--random", "100", "--seed", "1")
    code2, out2 = run(capsys, "prop6", "--prime", "5", "--random", "100", "--seed", "1")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "all hold: True" in out1


def test_prop6_explicit_poly(capsys):
    code, out = run(capsys, "prop6", "--prime", "3", "--poly", "1 + 2*x^2")
    assert code == 0 and "gcd=2" in out and "holds=True" in out


def test_bad_prime_errors(capsys):
    code = main(["compute", "--prime", "9", "--n", "2", "--ring", "Z"])
    assert code != 0


def test_error_path_returns_1(capsys):
    code = main(["chern", "--matrix-file", "/nonexistent.json", "--prime", "3"])
    assert code == 1
