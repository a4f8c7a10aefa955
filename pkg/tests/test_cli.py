import json
import subprocess
import sys


def run_cli(*args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "eqstates.cli", *args],
        capture_output=True,
        text=True,
        **kw,
    )


def test_expand_known_digits():
    r = run_cli("expand", "--beta", "3/2", "--digits", "9")
    assert r.returncode == 0
    assert "101000001" in r.stdout


def test_expand_invalid_beta_exits_2():
    r = run_cli("expand", "--beta", "1")
    assert r.returncode == 2
    assert "beta" in r.stderr


def test_unknown_model_exits_2():
    r = run_cli("words", "--model", "nope:3", "--n", "2")
    assert r.returncode == 2


def test_budget_exhaustion_exits_3():
    r = run_cli("words", "--model", "full:2", "--n", "30", "--budget", "100")
    assert r.returncode == 3
    assert "budget" in (r.stdout + r.stderr).lower()


def test_effective_config_echoed():
    r = run_cli("pressure", "--model", "full:2", "--nmax", "4")
    first = json.loads(r.stdout.splitlines()[0])
    assert first["config"]["model"] == "full:2"
    assert first["config"]["nmax"] == 4


def test_job_file_with_flag_override(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"command": "expand", "beta": "3/2", "digits": 9}))
    r = run_cli("--job", str(job))
    assert "101000001" in r.stdout
    r2 = run_cli("--job", str(job), "expand", "--digits", "4")
    assert "1010" in r2.stdout.splitlines()[1]


def test_out_file(tmp_path):
    out = tmp_path / "report.txt"
    r = run_cli("--out", str(out), "expand", "--beta", "3/2", "--digits", "5")
    assert r.returncode == 0
    assert "10100" in out.read_text()


def test_reports_byte_identical():
    args = ["pressure", "--model", "beta:3/2", "--dec", "basic", "--nmax", "8"]
    a = run_cli(*args).stdout
    b = run_cli(*args).stdout
    assert a == b


def test_verify_prints_per_check_lines():
    r = run_cli("verify", "bernoulli")
    assert r.returncode == 0
    lines = [l for l in r.stdout.splitlines() if l.startswith("[pass]")]
    assert len(lines) >= 3
