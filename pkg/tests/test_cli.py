import dataclasses
import json

import pytest

from extclass.catalog import CATALOG
from extclass.cli import main


def run(capsys, *argv, catalog=CATALOG):
    code = main(list(argv), catalog=catalog)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_catalog(capsys, tmp_path):
    out_path = tmp_path / "info.json"
    code, out, _ = run(capsys, "info", "catalog:g1", "--json", str(out_path))
    assert code == 0
    assert "dim Z2 = 3, dim B2 = 1, dim H2 = 2" in out
    doc = json.loads(out_path.read_text())
    assert doc["dim_H2"] == 2 and doc["fingerprint"]["ann_dim"] == 1


def test_info_orbits(capsys):
    code, out, _ = run(capsys, "info", "catalog:g3", "--alpha", "0", "--field", "Fp", "--p", "5", "--s", "1")
    assert code == 0
    assert "Aut-orbits on T_1: 2" in out


def test_info_file(capsys, tmp_path):
    path = tmp_path / "a.json"
    path.write_text('{"dim": 2, "brackets": [{"i": 1, "j": 2, "out": [["1", 1]]}]}')
    code, out, _ = run(capsys, "info", str(path))
    assert code == 0 and "dimension 2" in out


@pytest.mark.parametrize("argv", [
    ["info", "catalog:nope"],
    ["info", "catalog:g3"],
    ["info", "catalog:g1", "--field", "Fp"],
    ["info", "catalog:g1", "--s", "1"],
    ["verify-paper", "--only", "bogus"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_bad_json_reports_position(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 3,\n "brackets": [}')
    code, _, err = run(capsys, "info", str(path))
    assert code == 2 and "line 2" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "9"])
    assert exc.value.code == 2


def test_verify_subset(capsys, tmp_path):
    path = tmp_path / "v.json"
    code, out, _ = run(capsys, "verify-paper", "--only", "cohomology", "--json", str(path))
    assert code == 0
    assert "2/2 checks passed" in out
    doc = json.loads(path.read_text())
    assert doc["passed"] and [c["name"] for c in doc["checks"]] == ["cohomology-dims", "coboundary-identities"]


def test_verify_negative_control(capsys):
    cat = CATALOG.copy()
    # give g2 the bracket of g1: H2 dimensions and coboundaries no longer match
    cat.table1_entries["g2"] = dataclasses.replace(cat.table1_entries["g2"], table={(2, 3): {1: 1}})
    code, out, _ = run(capsys, "verify-paper", "--only", "cohomology", catalog=cat)
    assert code == 1
    assert "[FAIL] criterion 1 cohomology-dims" in out
    assert "g2" in out


def test_classify_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code, out, _ = run(capsys, "classify", "4", "--json", str(a))
    assert code == 0 and "ok" in out.splitlines()[0]
    code, _, _ = run(capsys, "classify", "4", "--jobs", "2", "--json", str(b))
    assert code == 0
    assert a.read_text() == b.read_text()


def test_catalog_dump(capsys):
    code, out, _ = run(capsys, "catalog", "dump")
    assert code == 0
    entries = json.loads(out)
    names = {e.get("name") for e in entries}
    assert {"g1", "A_{4,7}", "A_{6,16}"} <= names
    assert all({"dim", "field", "brackets"} <= set(e) for e in entries)


def test_info_examples(capsys, tmp_path):
    code, out, _ = run(capsys, "info", "catalog:A3")
    assert code == 0 and "dim H2 = 0" in out
    path = tmp_path / "one.json"
    path.write_text('{"dim": 1, "field": "Q"}')
    code, out, _ = run(capsys, "info", str(path))
    assert code == 0 and "dim Z2 = 0" in out


def test_info_flags_characteristic_two(capsys, tmp_path):
    path = tmp_path / "i.json"
    code, out, _ = run(capsys, "info", "catalog:g1", "--field", "Fp", "--p", "2", "--json", str(path))
    assert code == 0 and out.count("advisory") == 1
    assert json.loads(path.read_text())["advisory"] is True
    run(capsys, "info", "catalog:g1", "--json", str(path))
    assert json.loads(path.read_text())["advisory"] is False


def test_classify_prime_restriction(capsys):
    code, _, err = run(capsys, "classify", "4", "--p", "7")
    assert code == 2 and "F_3 or F_5" in err


def test_classify_n5_over_f5(capsys):
    code, out, _ = run(capsys, "classify", "5", "--p", "5")
    assert code == 0
    matched = {line.rsplit("-> ", 1)[1] for line in out.splitlines() if "->" in line}
    assert matched == {"A_{5,13}", "A_{5,14}", "A_{5,15}"}


def test_classify_n6_single_new_algebra(capsys):
    code, out, _ = run(capsys, "classify", "6")
    assert code == 0
    assert [line.rsplit("-> ", 1)[1] for line in out.splitlines() if "->" in line] == ["A_{6,16}"]
