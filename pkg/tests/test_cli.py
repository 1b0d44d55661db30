"""Tests for the command-line interface"""
import json

import pytest

from kcolored.cli import build_parser, main
from kcolored.commands import EXIT_ERROR, EXIT_OK
from kcolored.infrastructure.instances import FileInstanceRepository

SQUARE = """\
kcolored-instance 1
k 2
n 4
points
0 0
4 0
4 4
0 4
colors
1 1 1
1 2
1
end
"""


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text(SQUARE)
    return path


@pytest.fixture(autouse=True)
def reports_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("KCOLORED_REPORTS_DIR", str(tmp_path / "reports"))
    return tmp_path / "reports"


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_count(square_file, reports_dir, capsys):
    assert main(["count", "--instance", str(square_file), "--save-report"]) == EXIT_OK
    assert "monochromatic" in capsys.readouterr().out
    index = json.loads((reports_dir / "index.json").read_text())
    assert list(index["kinds"]) == ["count"]


def test_search_writes_instance(tmp_path):
    out = tmp_path / "found.txt"
    code = main(["search", "--n", "6", "--k", "2", "--preset", "quick", "--seed", "4", "--out", str(out)])
    assert code == EXIT_OK
    instance = FileInstanceRepository().load(out)
    assert (instance.n, instance.k, instance.seed) == (6, 2, 4)


def test_bound(square_file, capsys):
    assert main(["bound", "--instance", str(square_file), "--compare-samples", "3", "--seed", "1"]) == EXIT_OK
    assert "bound" in capsys.readouterr().out


def test_verify(square_file):
    assert main(["verify", "--instance", str(square_file), "--t-max", "1", "--seed", "2"]) == EXIT_OK


def test_invalid_instance_exits_with_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text(SQUARE.replace("1 2\n", "1 5\n"))
    assert main(["count", "--instance", str(path)]) == EXIT_ERROR
    assert "line 11" in capsys.readouterr().out


def test_missing_given_matching_exits_with_error(square_file):
    assert main(["bound", "--instance", str(square_file), "--use-given-matching"]) == EXIT_ERROR


def test_verify_size_guard_exits_with_error(square_file):
    assert main(["verify", "--instance", str(square_file), "--t-max", "3"]) == EXIT_ERROR
