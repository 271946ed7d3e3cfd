"""Document round-trips, shipped fixtures, CLI reports and exit codes."""

import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

import hopfkit
from hopfkit.errors import ParseError, VerificationError
from hopfkit.io import (
    document_to_text,
    parse_path,
    parse_text,
    serialize_bialgebra,
    serialize_monoid,
)
from hopfkit.monoid import FiniteMonoid, monogenic

FIXTURES = Path(hopfkit.__file__).parent / "fixtures"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "hopfkit", *args], capture_output=True, text=True
    )


def test_round_trip_bialgebra(qqp):
    doc = serialize_bialgebra(qqp)
    again = serialize_bialgebra(parse_text(document_to_text(doc)))
    assert doc == again
    assert document_to_text(doc) == document_to_text(again)


def test_round_trip_monoid():
    m = monogenic(2, 3)
    doc = serialize_monoid(m)
    again = parse_text(document_to_text(doc))
    assert isinstance(again, FiniteMonoid)
    assert serialize_monoid(again) == doc


def test_shipped_quantum_plane_fixture_matches_constructor(qqp):
    parsed = parse_path(str(FIXTURES / "quotient_quantum_plane.json"))
    assert parsed.dim == 6
    assert np.array_equal(parsed.mult, qqp.mult)
    assert np.array_equal(parsed.comult, qqp.comult)
    assert np.array_equal(parsed.unit, qqp.unit)
    assert np.array_equal(parsed.counit, qqp.counit)
    assert parsed.labels == qqp.labels


def test_shipped_monoid_fixture_parses():
    m = parse_path(str(FIXTURES / "monoid_monogenic_2_3.json"))
    assert isinstance(m, FiniteMonoid)
    assert m.size == 5 and m.mul(4, 1) == 2


def test_malformed_json_reports_location():
    with pytest.raises(ParseError, match="line"):
        parse_text("{not json")


def test_wrong_schema_and_bad_entries():
    with pytest.raises(ParseError, match="schema"):
        parse_text(json.dumps({"schema": "other/1"}))
    doc = {
        "schema": "hopfkit.bialgebra/1",
        "field": "F5",
        "dim": 1,
        "mult": [[0, 0, 0, 1, 2]],  # denominator must be 1 over F5
        "comult": [[0, 0, 0, 1, 1]],
        "unit": [[0, 1, 1]],
        "counit": [[0, 1, 1]],
    }
    with pytest.raises(ParseError, match="denominator"):
        parse_text(json.dumps(doc))
    doc["mult"] = [[0, 0, 5, 1, 1]]
    with pytest.raises(ParseError, match="out of range"):
        parse_text(json.dumps(doc))


def test_axiom_failure_carries_witness(qqp, tmp_path):
    doc = serialize_bialgebra(qqp)
    doc["comult"] = [e for e in doc["comult"] if e[0] != 3] + [[3, 3, 3, 1, 1]]
    with pytest.raises(VerificationError) as err:
        parse_text(json.dumps(doc))
    assert err.value.witness is not None


def corrupt_fixture_path(tmp_path, qqp):
    doc = serialize_bialgebra(qqp)
    doc["comult"] = [e for e in doc["comult"] if e[0] != 3] + [[3, 3, 3, 1, 1]]
    path = tmp_path / "corrupt.json"
    path.write_text(document_to_text(doc))
    return path


def test_cli_envelope_report_and_determinism(qqp):
    fixture = str(FIXTURES / "quotient_quantum_plane.json")
    first = run_cli("envelope", fixture)
    second = run_cli("envelope", fixture)
    assert first.returncode == 0
    assert first.stdout == second.stdout  # byte-identical reports
    doc = json.loads(first.stdout)
    assert doc["hopf_dim"] == 4
    assert doc["ker_i_dim"] == 2
    assert doc["antipode_present"] is True
    assert doc["oslash_iso"] is True


def test_cli_cofree_on_monogenic():
    res = run_cli("cofree", str(FIXTURES / "monoid_monogenic_2_3.json"))
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["cofree_dim"] == 1


def test_cli_verify_and_exit_codes(tmp_path, qqp):
    ok = run_cli("verify", str(FIXTURES / "dual_radford_2.json"))
    assert ok.returncode == 0
    corrupt = corrupt_fixture_path(tmp_path, qqp)
    bad = run_cli("verify", str(corrupt))
    assert bad.returncode == 2
    report = json.loads(bad.stdout)
    assert report["ok"] is False
    witnesses = [a for a in report["axioms"] if not a["ok"]]
    assert witnesses and "witness" in witnesses[0]


def test_cli_parse_error_exit_codes(tmp_path, qqp):
    missing = run_cli("verify", str(tmp_path / "nope.json"))
    assert missing.returncode == 2
    corrupt = corrupt_fixture_path(tmp_path, qqp)
    env = run_cli("envelope", str(corrupt))
    assert env.returncode == 2
    assert "witness" in env.stderr


def test_cli_usage_errors_exit_one():
    assert run_cli().returncode == 1
    assert run_cli("no-such-command").returncode == 1
    assert run_cli("envelope").returncode == 1  # missing input


def test_cli_cocofree_precondition():
    res = run_cli("cocofree", str(FIXTURES / "quotient_quantum_plane.json"))
    assert res.returncode == 2
    ok = run_cli("cocofree", str(FIXTURES / "monoid_cyclic_2.json"))
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["dim"] == 2


def test_cli_monoid_commands():
    units = run_cli("monoid", "units", str(FIXTURES / "monoid_monogenic_2_3.json"))
    assert units.returncode == 0
    doc = json.loads(units.stdout)
    assert doc["units"] == ["1"] and doc["left_units"] == ["1"]
    env = run_cli("monoid", "envgroup", str(FIXTURES / "monoid_monogenic_2_3.json"))
    assert env.returncode == 0
    gdoc = json.loads(env.stdout)
    assert gdoc["size"] == 3 and gdoc["mapping"] == [0, 1, 2, 0, 1]
    # monoid command on a bialgebra document is an input error
    wrong = run_cli("monoid", "units", str(FIXTURES / "quotient_quantum_plane.json"))
    assert wrong.returncode == 2


def test_cli_monoid_lift_with_field():
    res = run_cli(
        "envelope", str(FIXTURES / "monoid_monogenic_2_3.json"), "--field", "F3"
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["hopf_dim"] == 3


def test_cli_matrices_flag():
    res = run_cli(
        "frobenius", str(FIXTURES / "monoid_cyclic_2.json"), "--matrices"
    )
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["right_antipode"] == [["1", "0"], ["0", "1"]]


def test_cli_dualcheck():
    res = run_cli("dualcheck", str(FIXTURES / "quotient_quantum_plane.json"))
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["ok"] is True and doc["dim_cofree_of_dual"] == 4
