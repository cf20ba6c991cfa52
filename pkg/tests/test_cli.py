import json

from harmgraphs.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_phi_command(capsys):
    code, out, _ = run(capsys, "phi", "--family", "young-zz:e=3,t=2", "--mu", "2")
    assert code == EXIT_OK
    assert out.strip() == "1"


def test_eval_alias(capsys):
    code, out, _ = run(capsys, "eval", "phi", "--family", "schur:t=3", "--mu", "2+1")
    assert code == EXIT_OK
    assert out.strip() == "1/5"


def test_parameter_error_exits_2(capsys):
    code, _, err = run(capsys, "eval", "phi", "--family", "young-zz:e=3,t=0", "--mu", "1")
    assert code == EXIT_USAGE
    assert "forbidden" in err


def test_unknown_family_exits_2(capsys):
    code, _, err = run(capsys, "phi", "--family", "nope:t=1", "--mu", "1")
    assert code == EXIT_USAGE


def test_measure_csv_rows_sum_to_one(capsys):
    code, out, _ = run(
        capsys, "measure", "--family", "kingman:t=1,alpha=0", "--n", "4", "--out", "csv"
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "check,instance,lhs,rhs,ok"
    body = [l for l in lines[1:] if l.startswith("measure")]
    assert len(body) == 5  # partitions of 4
    assert lines[-1].startswith("normalization") and lines[-1].endswith("True")


def test_check_harmonic_passes(capsys):
    code, out, _ = run(
        capsys, "check-harmonic", "--family", "trunc-young:lambda=2+1", "--levels", "5"
    )
    assert code == EXIT_OK
    assert "summary:" in out and "0 failed" in out


def test_verify_harmonicity_positivity_failure(capsys):
    code, out, _ = run(
        capsys, "verify", "harmonicity", "--family", "schur:t=-1/2", "--levels", "4"
    )
    assert code == EXIT_CHECK_FAILED
    assert "FAIL  positivity" in out


def test_verify_forbidden_parameter_is_usage_error(capsys):
    code, _, err = run(
        capsys, "verify", "harmonicity", "--family", "schur:t=-1", "--levels", "4"
    )
    assert code == EXIT_USAGE


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == EXIT_USAGE
    assert "available" in err


def test_verify_selberg_single_instance(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "selberg",
        "--graph",
        "kingman",
        "--lam",
        "1+1",
        "--mu",
        "2",
    )
    assert code == EXIT_OK
    assert "lhs=3/5 rhs=3/5" in out


def test_integral_verify_json(capsys):
    code, out, _ = run(
        capsys,
        "integral-verify",
        "--graph",
        "young",
        "--lambda",
        "2+1",
        "--mu",
        "1+1",
        "--out",
        "json",
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["schema"] == "harmgraphs-report/1"
    assert doc["summary"] == {"passed": 1, "failed": 0}
    (row,) = doc["rows"]
    assert row["check"] == "selberg-young"
    assert row["lhs"] == row["rhs"]


def test_density_command(capsys):
    code, out, _ = run(
        capsys, "density", "--graph", "young", "--lambda", "1+1", "--at", "3/4,1/4"
    )
    assert code == EXIT_OK
    assert out.strip() == "45/16"


def test_dims_command(capsys):
    code, out, _ = run(capsys, "dims", "--kind", "schur", "--level", "4")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "level,partition,dim"
    assert "4,3+1,2" in out


def test_converge_small(capsys):
    code, out, _ = run(
        capsys,
        "converge",
        "--family",
        "trunc-kingman:lambda=1+1",
        "--n",
        "30,60",
        "--ratio-tol",
        "0.2",
        "--out",
        "json",
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    checks = {row["check"] for row in doc["rows"]}
    assert "convergence-mass" in checks and "convergence-monotone" in checks


def test_reports_are_deterministic(capsys):
    argv = [
        "verify",
        "pfaffian",
        "--points",
        "4",
        "--max-size",
        "6",
        "--seed",
        "11",
        "--out",
        "json",
    ]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2


def test_verify_workers_match_serial(capsys):
    base = ["verify", "selberg", "--graph", "gamma", "--max-size", "3", "--out", "json"]
    _, serial, _ = run(capsys, *base)
    _, parallel, _ = run(capsys, *base, "--workers", "4")
    assert serial == parallel


def test_output_file(tmp_path, capsys):
    path = tmp_path / "report.csv"
    code, out, _ = run(
        capsys,
        "measure",
        "--family",
        "schur:t=3",
        "--n",
        "3",
        "--out",
        "csv",
        "--output",
        str(path),
    )
    assert code == EXIT_OK
    assert path.exists()
    assert "wrote" in out
    assert path.read_text().startswith("check,instance")
