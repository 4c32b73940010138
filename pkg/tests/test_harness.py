import json

import pytest

from yagita.harness import (
    FAIL,
    INCOMPLETE,
    PASS,
    PASS_WITH_AMBIGUITY,
    exit_code,
    report_from_json,
    report_to_dict,
    report_to_json,
    table,
    table_tsv,
    verify_case,
)
from yagita.ringspec import Cyclotomic, QuadraticOrder, RationalIntegers

Z = RationalIntegers()


def test_verify_case_g1_small():
    r = verify_case(3, 2, Z)
    assert r.formula_value == 4 and not r.formula_ambiguous
    assert r.certified_lower == 4
    assert r.verdict == PASS
    kinds = [w.kind for w in r.witnesses]
    assert "G1(3,2)" in kinds
    assert all(w.verified for w in r.witnesses)
    assert all(c.rationality_ok and c.divides_formula for c in r.chern_consistency)


def test_verify_case_below_l_has_no_witnesses():
    r = verify_case(5, 3, Z)
    assert r.formula_value == 1
    assert r.witnesses == ()
    assert r.certified_lower == 1
    assert r.verdict == PASS


def test_verify_case_p2_n4():
    r = verify_case(2, 4, Z)
    assert r.formula_value == 8
    assert r.certified_lower == 8
    assert r.verdict == PASS
    oracle_by_kind = {w.kind: w.oracle for w in r.witnesses}
    assert oracle_by_kind["E(2,2)"] == 8


def test_verify_case_sl_half_certified():
    r = verify_case(5, 4, Z, sl=True)
    assert r.formula_value == 8 and r.formula_ambiguous
    assert r.certified_lower == 4
    assert r.verdict == PASS_WITH_AMBIGUITY


def test_verify_case_sl_incomplete_when_nothing_fits():
    r = verify_case(2, 2, Z, sl=True)
    assert r.formula_ambiguous and r.certified_lower == 1
    assert r.verdict == INCOMPLETE


def test_verify_case_sl_exact_over_gaussians():
    r = verify_case(2, 2, Cyclotomic(4), sl=True)
    assert r.formula_value == 4 and not r.formula_ambiguous
    assert r.certified_lower == 4  # the quaternion group certifies it
    assert r.verdict == PASS


def test_verify_case_unbuildable_ring_is_incomplete():
    r = verify_case(7, 6, QuadraticOrder(-7), sl=False)
    assert r.l == 3
    assert r.witnesses == ()
    assert r.verdict == INCOMPLETE


def test_report_json_round_trip_and_strings():
    r = verify_case(3, 6, Z)
    blob = report_to_json(r)
    parsed = report_from_json(blob)
    assert json.dumps(parsed, indent=2, sort_keys=True) == blob
    assert parsed["formula_value"] == "12"
    assert parsed["certified_lower"] == "12"
    assert isinstance(parsed["formula_ambiguous"], bool)
    assert all(isinstance(w["oracle"], str) for w in parsed["witnesses"])
    d = report_to_dict(r)
    assert d["p"] == "3" and d["verdict"] == "Pass"


def test_table_p2():
    rows = table(2, Z, 4)
    assert [r.gl for r in rows] == [2, 4, 4, 8]
    assert rows[0].sl == "-"
    assert rows[1].sl == "2"  # over Z the n = 2 value resolves to the half


def test_table_p5_special_column():
    rows = table(5, Z, 5)
    assert rows[3].gl == 8 and rows[3].sl == "4"
    assert rows[4].gl == 8 and rows[4].sl == "8"


def test_table_p3_sl2():
    rows = table(3, Z, 2)
    assert rows[1].sl == "2"


def test_table_ambiguity_annotation():
    rows = table(5, Cyclotomic(5), 2)
    assert "undetermined" in rows[1].sl


def test_table_tsv_shape():
    text = table_tsv(table(2, Z, 3))
    lines = text.splitlines()
    assert lines[0] == "n\tGL\tSL"
    assert len(lines) == 4


def test_exit_codes():
    assert exit_code(PASS) == 0
    assert exit_code(PASS_WITH_AMBIGUITY) == 2
    assert exit_code(INCOMPLETE) == 3
    assert exit_code(FAIL) == 1


def test_guards():
    with pytest.raises(ValueError):
        verify_case(4, 2, Z)
    with pytest.raises(ValueError):
        verify_case(3, 0, Z)
    with pytest.raises(ValueError):
        verify_case(3, 5000, Z)
    with pytest.raises(ValueError):
        table(3, Z, 5000)
