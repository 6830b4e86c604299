import json
import os
import subprocess

import jsonschema
import pytest

import mfblocks

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))
SCHEMAS = os.path.join(ROOT, "schemas")
DATA = os.path.join(ROOT, "data")
CLI = os.environ.get("MFBLOCKS_CLI")


def schema(name):
    with open(os.path.join(SCHEMAS, f"{name}.schema.json")) as fh:
        return json.load(fh)


def check(report):
    jsonschema.validate(report, schema(report["command"]))
    return report


def test_blocks_s3():
    r = check(mfblocks.blocks("S3", 3))
    assert r["num_blocks"] == 1
    b = r["blocks"][0]
    assert b["defect"] == 1
    assert b["defect_group"]["shape"] == "cyclic"
    assert b["defect_group"]["order"] == 3


def test_orbits():
    assert check(mfblocks.orbits("C3", 2))["orbit_lengths"] == [1, 2]
    assert check(mfblocks.orbits("C5", 2))["orbit_lengths"] == [1, 4]


def test_certify_a5():
    r = check(mfblocks.certify("A5", 5))
    assert r["all_exactly_one"] and r["replayed"]


def test_chartable_and_idempotents():
    t = check(mfblocks.chartable("S3"))
    assert sorted(c["size"] for c in t["classes"]) == [1, 2, 3]
    r = check(mfblocks.blocks("S3", 2, idempotents=True))
    assert all("idempotent" in b for b in r["blocks"])


def test_external_table():
    t = mfblocks.chartable(os.path.join(DATA, "tables", "2A6.json"))
    assert len(t["classes"]) == 13
    assert "group" not in t


def test_dominate():
    r = check(mfblocks.dominate("SL2_5", 5))
    for b in r["blocks"]:
        if b["dominated"]:
            assert b["dim"] == b["dominated_dim"]


def test_symmetric_reports():
    assert check(mfblocks.snblocks(5, 2))["table_agrees"]
    r = check(mfblocks.anreport(6, 3))
    assert r["table_agrees"]
    assert mfblocks.ell_core([4, 2, 1], 3) == [1]
    assert mfblocks.bar_core([4, 1], 5) == []
    assert mfblocks.conjugate([3, 1]) == [2, 1, 1]


def test_lietype():
    r = check(mfblocks.lietype("E8", 2, 5))
    assert r["upper_bound_2_count"] == 1
    assert check(mfblocks.suzukiree("2B2", 5))["verdicts"][0]["reason"] == "CyclicDefect"
    assert mfblocks.e_of(5, 2) == 4
    assert mfblocks.eval_phi(4, 2) == 5
    assert mfblocks.nu_ell(24, 2) == 3


def test_algebras():
    r = check(mfblocks.twist(os.path.join(DATA, "algebras", "F4_sqrt_omega.json"), 1))
    assert r["has_ell_form"] and r["isomorphic_to_input"]
    for f in ["C2xC2_F3.json", "C2xC2_F9.json", "D12_F25.json"]:
        assert check(mfblocks.twisted(os.path.join(DATA, "cocycles", f)))["root_iso"]["ok"]


def test_errors():
    with pytest.raises(mfblocks.MfError) as e:
        mfblocks.e_of(3, 9)
    assert e.value.name == "NotCoprime" and e.value.category == "domain"
    with pytest.raises(mfblocks.MfError) as e:
        mfblocks.blocks("NoSuchGroup", 2)
    assert e.value.exit_code == 1
    with pytest.raises(mfblocks.MfError) as e:
        mfblocks.twisted({"group": "S5", "ell": 3, "poly": [0, 1], "elements": [], "values": []})
    assert e.value.category == "schema"


@pytest.mark.skipif(not CLI, reason="MFBLOCKS_CLI not set")
@pytest.mark.parametrize(
    "args",
    [
        ["chartable", "A4"],
        ["blocks", "S4", "--ell", "2"],
        ["blocks", "C6", "--ell", "3", "--idempotents"],
        ["orbits", "C12", "--ell", "5"],
        ["certify", "C6xC2", "--ell", "2"],
        ["dominate", "SL2_3", "--ell", "2"],
        ["snblocks", "6", "--ell", "3"],
        ["anreport", "7", "--ell", "2"],
        ["lietype", "E7", "--ell", "2", "-q", "5"],
        ["lietype", "Spin+8", "--ell", "3", "-q", "4"],
        ["suzukiree", "2F4", "--ell", "5"],
        ["twist", os.path.join(DATA, "algebras", "F9_split.json"), "-a", "1"],
        ["twisted", os.path.join(DATA, "cocycles", "D12_F25.json"), "--algebra"],
    ],
)
def test_cli_outputs_validate(args):
    a = subprocess.run([CLI, *args], capture_output=True, text=True, check=True)
    b = subprocess.run([CLI, *args], capture_output=True, text=True, check=True)
    assert a.stdout == b.stdout
    check(json.loads(a.stdout))


@pytest.mark.skipif(not CLI, reason="MFBLOCKS_CLI not set")
@pytest.mark.parametrize(
    "args,code",
    [
        (["lietype", "E8", "--ell", "3", "-q", "9"], 1),
        (["blocks", "S7", "--ell", "2", "--bound", "100"], 2),
        (["twist", os.path.join(DATA, "groups", "S3.json")], 3),
        (["blocks", "S3", "--ell", "4"], 1),
    ],
)
def test_cli_errors(args, code):
    p = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert p.returncode == code
    err = json.loads(p.stderr)
    jsonschema.validate(err, schema("error"))
    assert err["exit_code"] == code
