import io
import json

from kostant_osc.cli import job_argv, run


def _run(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


def test_verify_duality_exit_zero():
    code, text = _run(["verify", "--suite", "duality", "--type", "c", "--d", "2", "--degree", "5"])
    assert code == 0
    assert text.startswith("PASS duality")


def test_homology_json_contributor():
    code, text = _run(["homology", "--side", "super", "--type", "c", "--m", "1", "--n", "1", "--d", "2",
                       "--lambda", "-", "--k", "1", "--json"])
    assert code == 0
    data = json.loads(text)
    assert [c["shape"] for c in data["contributors"]] == [[4]]


def test_weyl_listing():
    code, text = _run(["weyl", "--type", "a", "--kmax", "1"])
    lines = text.splitlines()
    assert code == 0 and len(lines) == 2
    assert lines[1].split()[-3:] == ["(3", "|", "3)"]


def test_char_and_casimir():
    code, text = _run(["char", "--type", "c", "--d", "2", "--lambda", "1", "--degree", "2", "--json"])
    assert code == 0 and json.loads(text)["character"]["degree_bound"] == 2
    code, text = _run(["casimir", "--side", "super", "--type", "d", "--d", "2", "--m", "1", "--n", "1",
                       "--lambda", "1", "--samples", "10"])
    assert code == 0 and "PASS casimir_lemma" in text


def test_usage_errors():
    assert _run(["verify", "--type", "z", "--d", "2"])[0] == 2
    assert _run(["char", "--type", "c", "--d", "3", "--lambda", "1"])[0] == 2
    assert _run(["char", "--type", "c", "--d", "2", "--lambda", "1,1"])[0] == 2
    assert _run([])[0] == 2


def test_output_is_deterministic():
    argv = ["casimir", "--side", "negative", "--type", "d", "--d", "2", "--seed", "5", "--json"]
    assert _run(argv) == _run(argv)


def test_job_argv():
    assert job_argv({"command": "verify", "type": "c", "d": 2, "json": True, "lambda": "1"}) == \
        ["verify", "--type", "c", "--d", "2", "--json", "--lambda", "1"]


def test_batch(tmp_path, monkeypatch):
    monkeypatch.setenv("KOSTANT_OSC_THREADS", "2")
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    code, text = _run(["batch", str(empty)])
    assert code == 0 and json.loads(text) == {"summary": {"jobs": 0, "ok": 0, "failed": 0}}

    jobs = tmp_path / "jobs.jsonl"
    job = {"command": "verify", "suite": "duality", "type": "c", "d": 2, "degree": 3}
    jobs.write_text("\n".join(json.dumps(dict(job, degree=D)) for D in (2, 3, 4)) + "\n")
    code, text = _run(["batch", str(jobs)])
    lines = [json.loads(x) for x in text.splitlines()]
    assert code == 0 and len(lines) == 4 and all(x["ok"] for x in lines[:3])

    mixed = tmp_path / "mixed.jsonl"
    mixed.write_text(json.dumps(job) + "\n{broken\n")
    code, text = _run(["batch", str(mixed)])
    lines = [json.loads(x) for x in text.splitlines()]
    assert code == 1
    assert [x["ok"] for x in lines[:2]] == [True, False]
    assert lines[2]["summary"]["failed"] == 1
