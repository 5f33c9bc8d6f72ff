import csv
import io
import json

import pytest

from grovergroup.cli import EXIT_RESOURCE, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_n4(capsys):
    code, out = run(capsys, "verify", "--n", "4")
    report = json.loads(out)
    assert code == 0
    assert report["schema_version"] == 1
    assert report["all_passed"]
    names = [c["name"] for c in report["checks"]]
    assert len(names) == len(set(names))
    quot = next(c for c in report["checks"] if c["name"] == "quotient_structure[monomial]")
    assert quot["details"] == "K/H = Z_4 x Z_2"


def test_verify_n5(capsys):
    code, out = run(capsys, "verify", "--n", "5")
    report = json.loads(out)
    assert code == 0
    details = {c["name"]: c["details"] for c in report["checks"]}
    assert details["quotient_structure[exact]"] == "K/H = Z_5"
    assert details["membership[monomial]"] == "G in H: True"


def test_verify_n1_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "1"])
    assert exc.value.code == 2


def test_verify_is_byte_stable(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--n", "6", "--out", str(a)]) == 0
    assert main(["verify", "--n", "6", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_period(capsys):
    assert run(capsys, "period", "--n", "6", "--mode", "both") == (0, "exact 12\nfloat 12\n")
    assert run(capsys, "period", "--n", "2", "--mode", "exact") == (0, "exact 4\n")
    assert run(capsys, "period", "--n", "3", "--mode", "float") == (0, "float 6\n")
    code, out = run(capsys, "period", "--n", "3", "--format", "json")
    assert json.loads(out)["expected"] == 6


def test_simulate_return(capsys, tmp_path):
    path = tmp_path / "p.csv"
    amps = tmp_path / "a.csv"
    assert main(["simulate", "--n", "4", "--steps", "8", "--init", "vertex:1",
                 "--out", str(path), "--amplitudes", str(amps)]) == 0
    rows = list(csv.DictReader(path.open()))
    by_t = {}
    for r in rows:
        by_t.setdefault(int(r["t"]), []).append(float(r["probability"]))
    for t, probs in by_t.items():
        assert abs(sum(probs) - 1) < 1e-9
    assert all(abs(a - b) < 1e-9 for a, b in zip(by_t[0], by_t[8]))
    arows = list(csv.DictReader(amps.open()))
    assert list(arows[0]) == ["t", "index", "re", "im"]
    first = [complex(float(r["re"]), float(r["im"])) for r in arows if r["t"] == "0"]
    last = [complex(float(r["re"]), float(r["im"])) for r in arows if r["t"] == "8"]
    assert max(abs(a - b) for a, b in zip(first, last)) < 1e-9


def test_simulate_zero_steps(capsys):
    code, out = run(capsys, "simulate", "--n", "2", "--steps", "0")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert {r["t"] for r in rows} == {"0"}
    assert list(rows[0]) == ["t", "vertex", "probability"]


def test_simulate_bad_init(capsys):
    code, _ = run(capsys, "simulate", "--n", "3", "--init", "vertex:7")
    assert code == 2


@pytest.mark.parametrize("n,k,h,name", [
    (3, 12, 4, "Z_3"),
    (4, 64, 8, "Z_4 x Z_2"),
    (2, 8, 2, "Z_2 x Z_2"),
])
def test_group(capsys, n, k, h, name):
    code, out = run(capsys, "group", "--n", str(n))
    rep = json.loads(out)
    assert code == 0
    assert (rep["order_K"], rep["order_H"], rep["quotient_structure"]) == (k, h, name)
    assert rep["minimal_exponent_m"] == 2 * n


def test_group_both_engines(capsys):
    code, out = run(capsys, "group", "--n", "4", "--engine", "both")
    assert code == 0
    assert json.loads(out)["cross_check_exact"]["order_K"] == 64


def test_resource_limit(capsys):
    assert main(["group", "--n", "6", "--max-elements", "50"]) == EXIT_RESOURCE


def test_verify_skips_large_exact_checks(capsys):
    code, out = run(capsys, "verify", "--n", "9", "--exact-limit", "8")
    status = {c["name"]: c["status"] for c in json.loads(out)["checks"]}
    assert code == 0
    assert status["diagonalization"] == status["U_period_exact"] == "skipped"
    assert "engine_agreement" not in status
