"""Tests for the instance text format"""
import pytest

from kcolored.domain.errors import InstanceParseError
from kcolored.domain.messages import InstanceFile
from kcolored.infrastructure.instances import FileInstanceRepository, atomic_write_text

SQUARE = """\
# convex quadrilateral with split diagonals
kcolored-instance 1
k 2
n 4
seed 3
points
0 0
4 0
4 4   # top right
0 4

colors
1 1 1
1 2
1
matching
1 2 3 0
details
1 L R
2 R L
1 S R
1 L L
end
"""


@pytest.fixture
def repository() -> FileInstanceRepository:
    return FileInstanceRepository()


def test_parse_full_instance(repository):
    instance = repository.parse(SQUARE)
    assert instance.k == 2
    assert instance.n == 4
    assert instance.seed == 3
    assert instance.points == [(0, 0), (4, 0), (4, 4), (0, 4)]
    assert instance.colors == [1, 1, 1, 1, 2, 1]
    assert instance.matching == [1, 2, 3, 0]
    assert instance.details[2] == (1, "S", "R")


def test_serialize_then_parse_preserves_instance(repository):
    instance = repository.parse(SQUARE)
    assert repository.parse(repository.serialize(instance)) == instance


def test_serialize_layout(repository):
    text = repository.serialize(InstanceFile(k=1, n=3, points=[(0, 0), (6, 1), (2, 5)], colors=[1, 1, 1]))
    assert text == "kcolored-instance 1\nk 1\nn 3\npoints\n0 0\n6 1\n2 5\ncolors\n1 1\n1\nend\n"


def test_save_and_load(repository, tmp_path):
    instance = repository.parse(SQUARE)
    path = repository.save(instance, tmp_path / "nested" / "square.txt")
    assert path.exists()
    assert repository.load(path) == instance
    assert not list(path.parent.glob("*.tmp"))


def test_load_missing_file(repository, tmp_path):
    with pytest.raises(InstanceParseError):
        repository.load(tmp_path / "missing.txt")


def test_atomic_write_replaces_content(tmp_path):
    path = tmp_path / "file.txt"
    atomic_write_text(path, "first")
    atomic_write_text(path, "second")
    assert path.read_text() == "second"


def _replace(old: str, new: str) -> str:
    assert old in SQUARE
    return SQUARE.replace(old, new, 1)


@pytest.mark.parametrize(
    "text,line,field",
    [
        (_replace("kcolored-instance 1", "instance 1"), 2, "header"),
        (_replace("kcolored-instance 1", "kcolored-instance 2"), 2, "version"),
        (_replace("k 2", "k two"), 3, "k"),
        (_replace("4 0\n", "4\n"), 8, "points"),
        (_replace("1 2\n", "1 3\n"), 14, "colors"),
        (_replace("1 2\n", "1 2 1\n"), 14, "colors"),
        (_replace("1 2 3 0", "1 0 3 2"), 17, "matching"),
        (_replace("2 R L", "2 S L"), 20, "details"),
        (_replace("1 L L", "1 L S"), 22, "details"),
        (_replace("colors", "colours"), 12, "colours"),
        (_replace("end\n", "end\nk 3\n"), 24, "end"),
        (_replace("seed 3", "seed -1"), 5, "seed"),
    ],
)
def test_parse_errors_carry_line_and_field(repository, text, line, field):
    with pytest.raises(InstanceParseError) as exc_info:
        repository.parse(text)
    assert exc_info.value.line == line
    assert exc_info.value.field == field
    assert f"line {line}" in str(exc_info.value)


def test_parse_rejects_truncated_file(repository):
    with pytest.raises(InstanceParseError) as exc_info:
        repository.parse(SQUARE.split("details")[0])
    assert exc_info.value.field == "end"


def test_parse_rejects_missing_section(repository):
    text = "kcolored-instance 1\nk 1\nn 3\npoints\n0 0\n1 0\n0 1\nend\n"
    with pytest.raises(InstanceParseError) as exc_info:
        repository.parse(text)
    assert exc_info.value.field == "colors"


def test_parse_rejects_repeated_section(repository):
    with pytest.raises(InstanceParseError) as exc_info:
        repository.parse(_replace("n 4\n", "n 4\nn 4\n"))
    assert "repeated" in str(exc_info.value)


def test_parse_rejects_details_without_matching(repository):
    text = _replace("matching\n1 2 3 0\n", "")
    with pytest.raises(InstanceParseError) as exc_info:
        repository.parse(text)
    assert exc_info.value.field == "details"
