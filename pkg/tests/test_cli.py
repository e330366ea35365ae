"""Command-line front end: modes, exit codes, formats, determinism."""

import io
import json

import pytest

from homfly3.cli import run
from homfly3.knotdb import golden
from homfly3.qpoly import substitute


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# ---------------------------------------------------------------------------
# compute

def test_compute_reduced_trefoil():
    code, out, err = invoke(
        "compute", "--braid", "-1,-1|-1,-1", "--rep", "1", "--out", "reduced"
    )
    assert code == 0
    assert out == "-A^4 + A^2*q^2 + A^2*q^-2\n"
    assert err == ""


def test_compute_by_knot_name():
    code, out, _ = invoke("compute", "--knot", "6_2", "--rep", "2", "--out", "reduced")
    assert code == 0
    assert out.strip() == golden("6_2", 2).render()


def test_compute_whitespace_insensitive():
    code, out, _ = invoke(
        "compute", "--braid", " -1 , -1 | -1 , -1 ", "--rep", "1", "--out", "reduced"
    )
    assert code == 0
    assert out == "-A^4 + A^2*q^2 + A^2*q^-2\n"


def test_compute_multiple_outputs_labelled():
    code, out, _ = invoke(
        "compute", "--braid", "-1,-1|-1,-1", "--rep", "1",
        "--out", "reduced,special",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "reduced: -A^4 + A^2*q^2 + A^2*q^-2"
    assert lines[1] == "special: -A^4 + 2*A^2"


def test_compute_antisymmetric_rep():
    code, out, _ = invoke(
        "compute", "--knot", "4_1", "--rep", "1^2", "--out", "reduced"
    )
    assert code == 0
    assert out.strip() == substitute(golden("4_1", 2), "q->-1/q").render()


def test_compute_json_schema_keys():
    code, out, _ = invoke(
        "compute", "--braid", "-1,-1|-1,-1", "--rep", "1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == [
        "braid", "r", "writhe", "coefficients", "reduced", "special", "jones",
    ]
    assert payload["braid"] == "-1,-1|-1,-1"
    assert payload["r"] == 1
    assert payload["writhe"] == -4
    assert payload["reduced"] == "-A^4 + A^2*q^2 + A^2*q^-2"


def test_compute_is_deterministic():
    first = invoke("compute", "--knot", "5_2", "--rep", "2", "--format", "json")
    second = invoke("compute", "--knot", "5_2", "--rep", "2", "--format", "json")
    assert first == second


def test_compute_link_note_on_stderr():
    code, out, err = invoke(
        "compute", "--braid", "1,1|1,1|1,1", "--rep", "1", "--out", "coefficients"
    )
    assert code == 0
    assert "components!=1 unverified" in err
    assert "[2,1]: 2" in out


def test_compute_link_reduced_fails_cleanly():
    code, _, err = invoke(
        "compute", "--braid", "1,1|1,1|1,1", "--rep", "1", "--out", "reduced"
    )
    assert code == 2
    assert "multi-component" in err


# ---------------------------------------------------------------------------
# exit codes on malformed / unsupported requests

@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "--braid", "1,2,3", "--rep", "1"),
        ("compute", "--rep", "1"),  # neither braid nor knot
        ("compute", "--braid", "1,1", "--knot", "3_1", "--rep", "1"),  # both
        ("compute", "--knot", "9_99", "--rep", "1"),
        ("compute", "--braid", "1,1", "--rep", "0"),
        ("table",),  # table requires --rep
        ("racah-dump", "--dim", "3", "--p", "1"),  # degenerate denominator
    ],
)
def test_parse_errors_exit_1(argv):
    code, _, err = invoke(*argv)
    assert code == 1
    assert err != ""


@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "--braid", "1,1", "--rep", "5"),
        ("compute", "--braid", "1,1", "--rep", "1^5"),
        ("racah-dump", "--dim", "6", "--p", "6"),
    ],
)
def test_unsupported_exit_3(argv):
    code, _, err = invoke(*argv)
    assert code == 3
    assert err != ""


# ---------------------------------------------------------------------------
# verify

def test_verify_single_knot_all_ranks():
    code, out, _ = invoke("verify", "--knot", "4_1", "--rep", "1..4")
    assert code == 0
    assert "4/4 pass" in out


def test_verify_json_single_pair():
    code, out, _ = invoke("verify", "--knot", "3_1", "--rep", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] == 1
    assert payload["total"] == 1
    assert payload["results"][0] == {"knot": "3_1", "r": 1, "pass": True}


# ---------------------------------------------------------------------------
# table

def test_table_r3_matches_block_census():
    code, out, _ = invoke("table", "--rep", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["Q", "j_min", "j_max", "mult"]
    assert len(lines) == 13  # header + 12 blocks
    assert lines[1].split() == ["[9]", "0", "0", "1"]
    assert lines[5].split() == ["[6,3]", "0", "3", "4"]
    assert lines[12].split() == ["[3,3,3]", "3", "3", "1"]


def test_table_json():
    code, out, _ = invoke("table", "--rep", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["r"] == 2
    rows = {row["Q"]: row["multiplicity"] for row in payload["rows"]}
    assert rows["[4,2]"] == 3
    assert rows["[2,2,2]"] == 1


# ---------------------------------------------------------------------------
# racah-dump

def test_racah_dump_2x2():
    code, out, _ = invoke("racah-dump", "--dim", "2", "--p", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "U(2|1):"
    assert lines[1] == "[0][0] = (q)/(q^2 + 1)"
    assert len(lines) == 5
