import json

import pytest

from coxsort import cli, harness


def test_jsonable_big_ints_become_strings():
    obj = harness.jsonable({"small": 7, "big": 2**60, "neg": -(2**60),
                            "seq": (1, 2**54), "set": {3, 1}})
    assert obj["small"] == 7
    assert obj["big"] == str(2**60)
    assert obj["neg"] == str(-(2**60))
    assert obj["seq"] == [1, str(2**54)]
    assert obj["set"] == [1, 3]
    json.dumps(obj)


def test_unknown_suite_and_experiment():
    with pytest.raises(ValueError):
        harness.run_suite("nope")
    with pytest.raises(ValueError):
        harness.experiment("nope")


def test_suites_pass_at_small_caps():
    for name, kwargs in [
        ("type-a", {"n": 5}),
        ("type-b", {"n": 3}),
        ("affine", {"n": 3, "k": 1}),
        ("descent-bounds", {"n": 4}),
    ]:
        report = harness.run_suite(name, **kwargs)
        failing = [c for c in report.checks if c.status == "fail"]
        assert report.ok, failing


def test_report_is_deterministic():
    a = harness.run_suite("type-a", n=4).to_json_obj()
    b = harness.run_suite("type-a", n=4).to_json_obj()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_skip_markers_without_slow():
    report = harness.run_suite("type-b", n=6)
    skipped = [c for c in report.checks if c.status.startswith("skipped")]
    assert any(c.claim == "not-sorted-sequence-n6" for c in skipped)
    assert report.ok  # skips do not fail the suite


def test_experiments_never_fail():
    rep = harness.experiment("parity-b", n=3)
    assert rep.ok and all(c.status == "pass" for c in rep.checks)
    rep = harness.experiment("iterations-b", n=2)
    assert rep.ok
    rep = harness.experiment("affine-monotonicity", n=2, samples=10, seed=1)
    assert rep.ok
    assert rep.checks[0].observed == {"violations": 0}


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("COXSORT_THREADS", "2")
    assert harness.worker_count() == 2
    monkeypatch.delenv("COXSORT_THREADS")
    assert harness.worker_count() >= 1


# --- command line ---------------------------------------------------------

def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_sort(capsys):
    code, out = run_cli(capsys, "sort", "--perm", "4,7,2,3,1,6,5")
    assert code == 0 and out.strip() == "4,2,1,3,5,6,7"
    code, out = run_cli(capsys, "sort", "--perm", "2,4,1,3,5",
                        "--decoration", "bbbbb")
    assert out.strip() == "2,1,4,3,5"


def test_cli_orbit(capsys):
    code, out = run_cli(capsys, "orbit", "--perm", "2,3,1")
    assert code == 0
    assert out.splitlines() == ["2,3,1", "2,1,3", "1,2,3"]


def test_cli_fertility_and_vhc(capsys):
    code, out = run_cli(capsys, "fertility", "--perm", "2,1,3")
    assert out.strip() == "1"
    code, out = run_cli(capsys, "vhc", "--perm", "2,1,3", "--emit", "json")
    data = json.loads(out)
    assert data["configurations"][0]["hooks"] == [{"sw": [1, 2], "ne": [3, 3]}]
    assert data["configurations"][0]["composition"] == [1, 1]


def test_cli_preimages(capsys):
    code, out = run_cli(capsys, "preimages", "--perm", "2,1,3")
    assert out.split() == ["2,3,1"]


def test_cli_enumerate(capsys):
    code, out = run_cli(capsys, "enumerate", "fences", "--n", "3")
    assert len(out.splitlines()) == 4
    code, out = run_cli(capsys, "enumerate", "avoiders", "--n", "2", "--out", "json")
    assert json.loads(out)["count"] == 3


def test_cli_type_b(capsys):
    code, out = run_cli(capsys, "sort-b", "--perm", "3,1,5,2,7,4,8,6")
    assert out.strip() == "1,3,2,5,4,7,6,8"
    code, out = run_cli(capsys, "orbit-b", "--perm", "8,2,3,4,5,6,7,1")
    assert len(out.splitlines()) == 5
    code, out = run_cli(capsys, "census-b", "--n", "2")
    lines = out.strip().splitlines()
    assert lines[0] == "element,descents,orbit_size,preimages"
    assert len(lines) == 9


def test_cli_affine(capsys):
    code, out = run_cli(capsys, "affine", "sort", "--window", "[3,-1,2,-2,7,12]")
    assert out.strip() == "[-2,2,3,6,7,5]"
    code, out = run_cli(capsys, "affine", "fertility", "--window", "[-2,2,3,6,7,5]")
    assert out.strip() == "21"
    code, out = run_cli(capsys, "affine", "preimages", "--window", "[0,3]")
    assert code == 0 and len(out.splitlines()) >= 1
    code, out = run_cli(capsys, "affine", "count-2ss", "--n", "3", "--out", "json")
    assert json.loads(out)["counts"]["3"] == 25
    code, out = run_cli(capsys, "affine", "uniquely-sorted-classes", "--k", "1",
                        "--out", "json")
    assert json.loads(out)["counts_by_rank"]["2"] == 2


def test_cli_verify_json_and_exit_code(capsys):
    code, out = run_cli(capsys, "verify", "type-a", "--n", "4", "--out", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert all(set(c) == {"claim", "statement", "params", "expected",
                          "observed", "status"} for c in data["checks"])


def test_cli_verify_csv(capsys):
    code, out = run_cli(capsys, "verify", "descent-bounds", "--n", "3", "--out", "csv")
    assert code == 0
    assert out.splitlines()[0] == "suite,claim,status,params,expected,observed"


def test_cli_experiment(capsys):
    code, out = run_cli(capsys, "experiment", "parity-b", "--n", "3")
    assert code == 0 and "parity-n3" in out


def test_cli_bad_input(capsys):
    code = cli.main(["sort", "--perm", "1,1"])
    assert code == 2
