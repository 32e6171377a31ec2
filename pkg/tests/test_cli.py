import json

import pytest

import pgrid.cli as cli
from pgrid import CheckRow, SuiteReport, parse_instance


@pytest.fixture
def board(tmp_path):
    """Extremal witness board for an 8x5 grid with 24 polluted cells."""
    path = tmp_path / "board.pgrid"
    assert cli.run(["construct", "-m", "8", "-n", "5", "-k", "24", "-o", str(path)]) == 0
    return path


def test_formula_grid_value(capsys):
    assert cli.run(["formula", "grid", "-m", "8", "-n", "5"]) == 0
    assert capsys.readouterr().out == "7\n"


def test_formula_mkmin_value_and_json(capsys):
    assert cli.run(["formula", "mkmin", "-m", "8", "-n", "5", "-k", "8"]) == 0
    assert capsys.readouterr().out == "6\n"
    assert cli.run(["formula", "mkmin", "-m", "8", "-n", "5", "-k", "8", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "k": 8,
        "m": 8,
        "n": 5,
        "name": "mkmin",
        "value": 6,
    }


def test_formula_usage_errors(capsys):
    assert cli.run(["formula", "grid", "-m", "8", "-n", "5", "-k", "1"]) == 2
    assert "usage error" in capsys.readouterr().err
    assert cli.run(["formula", "mkmin", "-m", "8", "-n", "5"]) == 2
    assert "requires -k" in capsys.readouterr().err
    assert cli.run(["formula", "nope", "-m", "8", "-n", "5"]) == 2


def test_formula_domain_error(capsys):
    assert cli.run(["formula", "mkmin", "-m", "5", "-n", "8", "-k", "1"]) == 1
    assert "error:" in capsys.readouterr().err


def test_construct_stdout_round_trips(capsys):
    assert cli.run(["construct", "-m", "8", "-n", "5", "-k", "8"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("pgrid v1\n")
    instance, seeds = parse_instance(out)
    assert instance.k == 8
    assert len(seeds) == 6


def test_construct_json_summary(capsys):
    assert cli.run(["construct", "-m", "8", "-n", "5", "-k", "24", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["claimed_size"] == 4
    assert payload["seeds"] == [[1, 4], [1, 2], [2, 1], [4, 1]]
    assert len(payload["polluted"]) == 24
    assert payload["written_to"] is None


def test_construct_is_deterministic(capsys):
    assert cli.run(["construct", "-m", "20", "-n", "13", "-k", "100"]) == 0
    first = capsys.readouterr().out
    assert cli.run(["construct", "-m", "20", "-n", "13", "-k", "100"]) == 0
    assert capsys.readouterr().out == first


def test_construct_writes_file(board, capsys):
    text = board.read_text()
    assert text.startswith("pgrid v1\n")
    instance, seeds = parse_instance(text)
    assert instance.k == 24 and len(seeds) == 4
    assert capsys.readouterr().out == ""


def test_percolate_summary(board, capsys):
    assert cli.run(["percolate", str(board)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "percolated: true"
    assert lines[1] == "rounds: 5"
    assert lines[2] == "seeds: 4"
    assert lines[3] == "infected: 16 of 16 residual cells"


def test_percolate_json(board, capsys):
    assert cli.run(["percolate", str(board), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["percolated"] is True
    assert payload["round_count"] == 5
    assert payload["seeds"] == 4
    assert payload["final"] == payload["residual"] == 16
    assert len(payload["rounds"]) == 6
    assert payload["rounds"][0] == [[1, 4], [1, 2], [2, 1], [4, 1]]


def test_percolate_render_flag(board, capsys):
    assert cli.run(["percolate", str(board), "--render", "ascii"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("grid 8x5\nround 0:\n")
    assert out.endswith("percolated: true\n")
    assert cli.run(["percolate", str(board), "--render", "ascii", "--json"]) == 2


def test_search_json(board, capsys):
    assert cli.run(["search", str(board), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "nodes_explored": 138,
        "size": 4,
        "witness": [[1, 4], [3, 4], [4, 3], [1, 1]],
    }


def test_search_human_output(board, capsys):
    assert cli.run(["search", str(board)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "size: 4"
    assert lines[1] == "witness: (1,4) (3,4) (4,3) (1,1)"
    assert lines[2].startswith("nodes explored: ")


def test_search_budget_exhaustion(board, capsys):
    assert cli.run(["search", str(board), "--budget", "1"]) == 1
    assert "budget" in capsys.readouterr().err


def test_missing_file_is_a_domain_error(tmp_path, capsys):
    assert cli.run(["percolate", str(tmp_path / "absent.pgrid")]) == 1
    assert "error:" in capsys.readouterr().err


def test_verify_summary_and_exit_zero(capsys):
    rc = cli.run(["verify", "perimeter", "--max-t", "3", "--trace-samples", "2", "--seed", "7"])
    assert rc == 0
    assert capsys.readouterr().out == "suite perimeter: 6 checks, 6 passed, 0 failed\n"


def test_verify_csv_stdout(capsys):
    rc = cli.run(["verify", "perimeter", "--max-t", "2", "--trace-samples", "0", "--csv"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "suite,m,n,k,expected,actual,pass,elapsed_ms"
    assert len(lines) == 4  # 2 formula rows + the identity row


def test_verify_json_to_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = cli.run(
        ["verify", "monotonicity", "--max-mn", "4", "--json", "-o", str(out)]
    )
    assert rc == 0
    assert capsys.readouterr().out == "suite monotonicity: 7 checks, 7 passed, 0 failed\n"
    doc = json.loads(out.read_text())
    assert doc["suite"] == "monotonicity" and doc["passed"] is True


def test_verify_csv_json_flags_conflict():
    assert cli.run(["verify", "perimeter", "--csv", "--json"]) == 2


def test_verify_failure_exits_three(monkeypatch, capsys):
    fake = SuiteReport(
        "perimeter",
        {},
        0,
        [CheckRow("perimeter.formula", None, None, 3, 8, 9, False, 0.1)],
    )
    monkeypatch.setattr(cli, "verify_perimeter", lambda *a, **kw: fake)
    assert cli.run(["verify", "perimeter"]) == 3
    out = capsys.readouterr().out
    assert "1 failed" in out
    assert "FAIL perimeter.formula" in out


def test_verify_bad_limit_is_domain_error(capsys):
    assert cli.run(["verify", "perimeter", "--max-t", "30"]) == 1
    assert "error:" in capsys.readouterr().err


def test_render_stdout_and_file(board, tmp_path, capsys):
    assert cli.run(["render", str(board)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("grid 8x5\n")
    target = tmp_path / "trace.svg"
    assert cli.run(["render", str(board), "--style", "svg", "-o", str(target)]) == 0
    assert target.read_text().startswith("<svg ")
    assert capsys.readouterr().out == ""


def test_no_subcommand_is_usage_error():
    assert cli.run([]) == 2
