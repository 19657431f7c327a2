# File: tests/test_main.py
"""Command line behaviour end to end"""
import pytest
import yaml

from config.settings import ConfigManager
from core.models import CommandType, JobConfig
from main import main
from orchestration.coordinator import EXIT_INPUT_ERROR, EXIT_NEGATIVE, EXIT_OK, JobCoordinator


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def _matrix_file(workdir, name, rows):
    lines = [f"{len(rows)} {len(rows[0])}"] + [" ".join(str(v) for v in row) for row in rows]
    path = workdir / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_det_of_identity(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert _run(capsys, ["det", a])[:2] == (EXIT_OK, "1\n")


def test_det_with_adjoint_method(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[2, 3], [4, 5]])
    assert _run(capsys, ["det", a, "--method", "adjoint"])[:2] == (EXIT_OK, "-2\n")
    singular = _matrix_file(workdir, "s.txt", [[1, 2], [2, 4]])
    assert _run(capsys, ["det", singular, "--method", "adjoint"])[:2] == (EXIT_OK, "0\n")


def test_det_over_polynomials(workdir, capsys):
    path = workdir / "p.txt"
    path.write_text("2 2\nx 1\n1 x\n", encoding="utf-8")
    assert _run(capsys, ["det", str(path), "--ring", "polymod=5"])[:2] == (EXIT_OK, "4+x^2\n")


def test_adj(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[2, 3], [4, 5]])
    assert _run(capsys, ["adj", a])[:2] == (EXIT_OK, "2 2\n5 -3\n-4 2\n")


def test_adj_of_singular_matrix(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[1, 2], [2, 4]])
    assert _run(capsys, ["adj", a])[:2] == (EXIT_NEGATIVE, "SINGULAR\n")


def test_rank(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[1, 2], [2, 4], [3, 6]])
    assert _run(capsys, ["rank", a])[:2] == (EXIT_OK, "1\n")


def test_rational_solve(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[1, 2]])
    c = _matrix_file(workdir, "c.txt", [[5]])
    assert _run(capsys, ["solve", a, c])[:2] == (EXIT_OK, "5 0 / 1\n0 5 / 2\n")


@pytest.mark.parametrize("method", ["adjoint", "bareiss", "dixon"])
def test_rational_solve_methods_agree(workdir, capsys, method):
    a = _matrix_file(workdir, "a.txt", [[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    c = _matrix_file(workdir, "c.txt", [[1], [2], [3]])
    code, out, _ = _run(capsys, ["solve", a, c, "--method", method, "--seed", "5"])
    assert code == EXIT_OK
    assert out == "1 1 2 / 3\n"


def test_diophantine_without_integral_solution(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[2]])
    c = _matrix_file(workdir, "c.txt", [[3]])
    assert _run(capsys, ["solve", a, c, "--mode", "diophantine"])[:2] == (EXIT_NEGATIVE, "NO_SOLUTION\n")


def test_diophantine_basis(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[1, 2]])
    c = _matrix_file(workdir, "c.txt", [[5]])
    code, out, _ = _run(capsys, ["solve", a, c, "--mode", "diophantine", "--seed", "3"])
    assert code == EXIT_OK
    vectors = [[int(v) for v in line.split()] for line in out.splitlines()]
    assert len(vectors) == 2
    assert all(x + 2 * y == 5 for x, y in vectors)


def test_diophantine_inconclusive(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[2, 4]])
    c = _matrix_file(workdir, "c.txt", [[1]])
    argv = ["solve", a, c, "--mode", "diophantine", "--max-iters", "2", "--seed", "1"]
    assert _run(capsys, argv)[:2] == (EXIT_NEGATIVE, "INCONCLUSIVE\n")


def test_inconsistent_system(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[1, 1], [2, 2]])
    c = _matrix_file(workdir, "c.txt", [[1], [3]])
    assert _run(capsys, ["solve", a, c])[:2] == (EXIT_NEGATIVE, "INCONSISTENT\n")


def test_homogeneous_full_rank_prints_nothing(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[1, 2], [3, 4]])
    c = _matrix_file(workdir, "c.txt", [[0], [0]])
    assert _run(capsys, ["solve", a, c])[:2] == (EXIT_OK, "")


def test_bench_report(workdir, capsys):
    code, out, _ = _run(capsys, ["bench", "--sizes", "4,8", "--seed", "3"])
    assert code == EXIT_OK
    report = yaml.safe_load(out)
    assert report['seed'] == 3
    assert [r['n'] for r in report['records']] == [4, 8]
    assert all(r['ratio'] == 1.0 for r in report['records'])


def test_bench_non_powers(workdir, capsys):
    assert _run(capsys, ["bench", "--sizes", "6"])[0] == EXIT_INPUT_ERROR
    assert _run(capsys, ["bench", "--sizes", "6", "--non-powers"])[0] == EXIT_OK


def test_output_file(workdir, capsys):
    a = _matrix_file(workdir, "a.txt", [[3]])
    out_path = workdir / "result.txt"
    code, out, _ = _run(capsys, ["det", a, "--out", str(out_path)])
    assert (code, out) == (EXIT_OK, "")
    assert out_path.read_text(encoding="utf-8") == "3\n"


def test_adj_reads_and_writes_trees(workdir, capsys):
    source = workdir / "a.yaml"
    source.write_text("rows: 2\ncols: 2\nentries: ['2', '3', '4', '5']\n", encoding="utf-8")
    out_path = workdir / "adj.yaml"
    assert _run(capsys, ["adj", str(source), "--out", str(out_path)])[:2] == (EXIT_OK, "")
    tree = yaml.safe_load(out_path.read_text(encoding="utf-8"))
    assert tree == {'rows': 2, 'cols': 2, 'entries': ["5", "-3", "-4", "2"]}


@pytest.mark.parametrize("argv", [
    ["det"],
    ["solve", "a.txt"],
    ["det", "missing.txt"],
    ["det", "a.txt", "--ring", "polymod"],
    ["det", "a.txt", "--ring", "q"],
    ["frobnicate", "a.txt"],
    ["solve", "a.txt", "a.txt", "--max-iters", "0"],
])
def test_input_errors(workdir, capsys, argv):
    _matrix_file(workdir, "a.txt", [[1, 2], [3, 4]])
    code, out, _ = _run(capsys, argv)
    assert code == EXIT_INPUT_ERROR
    assert out == ""


def test_malformed_matrix_file(workdir, capsys):
    path = workdir / "bad.txt"
    path.write_text("2 2\n1 2\n3\n", encoding="utf-8")
    code, _, err = _run(capsys, ["det", str(path)])
    assert code == EXIT_INPUT_ERROR
    assert "Input error" in err


@pytest.mark.parametrize("text", ["1 1\n²\n", "² 1\n4\n"])
def test_non_ascii_digits_are_input_errors(workdir, capsys, text):
    path = workdir / "sup.txt"
    path.write_text(text, encoding="utf-8")
    code, out, err = _run(capsys, ["det", str(path)])
    assert (code, out) == (EXIT_INPUT_ERROR, "")
    assert "Input error" in err


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0


def test_config_file_sets_seed(workdir):
    (workdir / "exactla.yaml").write_text("seed: 1234\n", encoding="utf-8")
    _matrix_file(workdir, "a.txt", [[1]])
    manager = ConfigManager()
    manager.load_config()
    result = JobCoordinator(manager).run(JobConfig(command=CommandType.RANK, matrix_path="a.txt"))
    assert result['seed'] == 1234
    assert result['exit_code'] == EXIT_OK
    assert result['output'] == "1\n"


def test_seed_is_drawn_when_absent(workdir):
    _matrix_file(workdir, "a.txt", [[1]])
    manager = ConfigManager()
    manager.load_config()
    result = JobCoordinator(manager).run(JobConfig(command=CommandType.RANK, matrix_path="a.txt"))
    assert isinstance(result['seed'], int)
