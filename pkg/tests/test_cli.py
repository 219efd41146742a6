import json

from billiardknots.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reduce_command(capsys):
    code, out, _ = run(capsys, "reduce", "0011")
    assert code == 0
    assert out.strip() == "1"


def test_reduce_json(capsys):
    code, out, _ = run(capsys, "reduce", "100001001110", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["reduced"] == "101"
    assert data["crossing_number"] == 3


def test_moves_command(capsys):
    code, out, _ = run(capsys, "moves", "10100")
    assert code == 0
    assert "external-suffix@3: 100" in out
    code, out, _ = run(capsys, "moves", "101")
    assert "(no moves)" in out


def test_class_command(capsys):
    code, out, _ = run(capsys, "class", "101", "--format", "json")
    data = json.loads(out)
    assert data["canonical"] == "010" and data["r"] == 2
    code, out, _ = run(capsys, "class", "101", "--chiral", "--format", "json")
    assert json.loads(out)["canonical"] == "101"


def test_prob_command(capsys):
    code, out, _ = run(capsys, "prob", "101", "--n", "6")
    assert code == 0
    assert out.startswith("18/64")
    code, out, _ = run(capsys, "prob", "101", "--n", "5")
    assert code == 2


def test_pmf_command_formats(capsys):
    code, out, _ = run(capsys, "pmf", "--n", "6", "--format", "json")
    data = json.loads(out)
    assert data["pmf"]["3"] == "18/64" and data["unknot"] == "36/64"
    code, out, _ = run(capsys, "pmf", "--n", "6", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "c,numerator,denominator,float"
    assert lines[1].startswith("0,36,64")


def test_rate_command(capsys):
    code, out, _ = run(capsys, "rate", "--word", "101", "--n", "99", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert abs(data["target"] + 0.0817) < 1e-3
    assert data["gap"] < 0.05


def test_enumerate_command(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["counts"] == {"": "12", "010": "2", "0101": "2"}


def test_enumerate_guard_env(capsys, monkeypatch):
    monkeypatch.setenv("BILLIARDKNOTS_MAX_ENUM_N", "3")
    code, _, err = run(capsys, "enumerate", "--n", "4")
    assert code == 3
    assert "guard" in err
    monkeypatch.setenv("BILLIARDKNOTS_MAX_ENUM_N", "not-a-number")
    code, _, err = run(capsys, "enumerate", "--n", "3")
    assert code == 2


def test_insertions_command(capsys):
    code, out, _ = run(
        capsys, "insertions", "101", "--m", "1", "--internal-only", "--format", "json"
    )
    data = json.loads(out)
    assert data["count"] == 5
    code, out, _ = run(capsys, "insertions", "101", "--m", "1", "--format", "json")
    assert json.loads(out)["count"] == 9


def test_trace_command(capsys):
    code, out, _ = run(capsys, "trace", "101", "--m", "2", "--locations", "1,5")
    assert code == 0
    assert "success 000111101" in out
    code, out, _ = run(capsys, "trace", "101", "--m", "2", "--locations", "1,8")
    assert "failure" in out
    code, out, _ = run(
        capsys, "trace", "101", "--m", "2", "--locations", "1,5", "--format", "json"
    )
    data = json.loads(out)
    assert data["word"] == "000111101"
    assert data["steps"][0] == {"i": 1, "in_L": True, "letter": "0", "stack": "00101"}


def test_sample_command_deterministic(capsys):
    args = ("sample", "--n", "12", "--count", "2000", "--seed", "11", "--format", "json")
    code, out1, _ = run(capsys, *args)
    assert code == 0
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    data = json.loads(out1)
    assert "tv_distance_to_exact" in data  # exact pmf attached for small n


def test_render_command(capsys, tmp_path):
    target = tmp_path / "trefoil.svg"
    code, out, _ = run(capsys, "render", "101", "--out", str(target))
    assert code == 0
    content = target.read_text()
    assert content.startswith("<?xml")
    code2, _, err = run(capsys, "render", "10", "--out", str(target))
    assert code2 == 2


def test_selfcheck_quick(capsys):
    code, out, _ = run(capsys, "selfcheck")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 7


def test_invalid_word_is_exit_2(capsys):
    code, _, err = run(capsys, "reduce", "10x")
    assert code == 2
    assert "error" in err
