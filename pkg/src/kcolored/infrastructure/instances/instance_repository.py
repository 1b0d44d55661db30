"""Line-oriented text format for instances

    kcolored-instance 1
    k <k>
    n <n>
    seed <seed>              optional
    points                   followed by n lines "<x> <y>"
    colors                   followed by n - 1 rows; row i lists colors of (i, j), j > i
    matching                 optional, followed by one line of n targets
    details                  optional, followed by n lines "<c'> <m1> <m2>"
    end

'#' starts a comment; blank lines are ignored.
"""

import os
import tempfile
from pathlib import Path

from pydantic import ValidationError

from kcolored.doubling import validate_details
from kcolored.domain.entities import Details
from kcolored.domain.errors import InstanceParseError, InvalidDetailsError, InvalidMatchingError
from kcolored.domain.messages import INSTANCE_FORMAT_VERSION, InstanceFile
from kcolored.domain.ports import InstanceRepositoryPort
from kcolored.domain.types import FIRST_TARGETS, SECOND_TARGETS
from kcolored.infrastructure.logging import get_logger

logger = get_logger("instances.repository")

HEADER = "kcolored-instance"
SECTIONS = ("k", "n", "seed", "points", "colors", "matching", "details", "end")


def atomic_write_text(path: Path, text: str) -> Path:
    """Write through a temporary file in the target directory, then rename over the target"""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    return path


class _Lines:
    """Significant lines as (line number, tokens)"""

    def __init__(self, text: str):
        self.rows: list[tuple[int, list[str]]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            content = raw.split("#", 1)[0].strip()
            if content:
                self.rows.append((number, content.split()))
        self.position = 0
        self.last_line = self.rows[-1][0] if self.rows else 0

    def next(self, field: str) -> tuple[int, list[str]]:
        if self.position >= len(self.rows):
            raise InstanceParseError("Unexpected end of file", line=self.last_line, field=field)
        row = self.rows[self.position]
        self.position += 1
        return row

    def exhausted(self) -> bool:
        return self.position >= len(self.rows)


def _int(token: str, line: int, field: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceParseError(f"Expected an integer, got '{token}'", line=line, field=field) from None


def _ints(tokens: list[str], count: int, line: int, field: str) -> list[int]:
    if len(tokens) != count:
        raise InstanceParseError(f"Expected {count} values, got {len(tokens)}", line=line, field=field)
    return [_int(token, line, field) for token in tokens]


class FileInstanceRepository(InstanceRepositoryPort):
    """Reads and writes instances in the version-1 text format"""

    def load(self, path: Path | str) -> InstanceFile:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise InstanceParseError(f"Cannot read {path}: {exc}") from exc
        instance = self.parse(text)
        logger.debug(f"Loaded instance {path}: n={instance.n}, k={instance.k}")
        return instance

    def save(self, instance: InstanceFile, path: Path | str) -> Path:
        path = atomic_write_text(Path(path), self.serialize(instance))
        logger.debug(f"Saved instance {path}: n={instance.n}, k={instance.k}")
        return path

    def parse(self, text: str) -> InstanceFile:
        lines = _Lines(text)
        line, tokens = lines.next("header")
        if len(tokens) != 2 or tokens[0] != HEADER:
            raise InstanceParseError(f"Expected '{HEADER} <version>'", line=line, field="header")
        version = _int(tokens[1], line, "version")
        if version != INSTANCE_FORMAT_VERSION:
            raise InstanceParseError(
                f"Unsupported version {version}, expected {INSTANCE_FORMAT_VERSION}", line=line, field="version"
            )

        values: dict[str, object] = {"version": version}
        section_lines: dict[str, int] = {}
        detail_lines: list[int] = []
        while True:
            line, tokens = lines.next("end")
            keyword = tokens[0]
            if keyword not in SECTIONS:
                raise InstanceParseError(f"Unknown section '{keyword}'", line=line, field=keyword)
            if keyword in section_lines:
                raise InstanceParseError(f"Section '{keyword}' repeated", line=line, field=keyword)
            section_lines[keyword] = line
            if keyword == "end":
                break

            if keyword in ("k", "n", "seed"):
                (value,) = _ints(tokens[1:], 1, line, keyword)
                if value < (0 if keyword == "seed" else 1):
                    raise InstanceParseError(f"Value {value} out of range", line=line, field=keyword)
                values[keyword] = value
                continue

            n = values.get("n")
            if n is None:
                raise InstanceParseError(f"Section '{keyword}' must follow 'n'", line=line, field=keyword)
            if len(tokens) != 1:
                raise InstanceParseError(f"Section '{keyword}' takes no values on its line", line=line, field=keyword)

            if keyword == "points":
                points = []
                for _ in range(n):
                    row_line, row = lines.next("points")
                    x, y = _ints(row, 2, row_line, "points")
                    points.append((x, y))
                values["points"] = points
            elif keyword == "colors":
                k = values.get("k")
                if k is None:
                    raise InstanceParseError("Section 'colors' must follow 'k'", line=line, field="colors")
                colors = []
                for i in range(n - 1):
                    row_line, row = lines.next("colors")
                    for color in _ints(row, n - 1 - i, row_line, "colors"):
                        if not 1 <= color <= k:
                            raise InstanceParseError(f"Color {color} outside 1..{k}", line=row_line, field="colors")
                        colors.append(color)
                values["colors"] = colors
            elif keyword == "matching":
                row_line, row = lines.next("matching")
                section_lines["matching"] = row_line
                values["matching"] = _ints(row, n, row_line, "matching")
            elif keyword == "details":
                details = []
                for _ in range(n):
                    row_line, row = lines.next("details")
                    if len(row) != 3:
                        raise InstanceParseError(f"Expected 3 values, got {len(row)}", line=row_line, field="details")
                    c_prime = _int(row[0], row_line, "details")
                    if row[1] not in FIRST_TARGETS or row[2] not in SECOND_TARGETS:
                        raise InstanceParseError(
                            f"Targets must be in {'/'.join(FIRST_TARGETS)} and {'/'.join(SECOND_TARGETS)}, "
                            f"got '{row[1]} {row[2]}'",
                            line=row_line,
                            field="details",
                        )
                    details.append((c_prime, row[1], row[2]))
                    detail_lines.append(row_line)
                values["details"] = details

        if not lines.exhausted():
            extra_line, _ = lines.next("end")
            raise InstanceParseError("Content after 'end'", line=extra_line, field="end")
        for required in ("k", "n", "points", "colors"):
            if required not in values:
                raise InstanceParseError(f"Missing section '{required}'", line=section_lines["end"], field=required)
        if "details" in values and "matching" not in values:
            raise InstanceParseError("Details require a matching", line=section_lines["details"], field="details")

        try:
            instance = InstanceFile(**values)
        except ValidationError as exc:
            error = exc.errors()[0]
            field = str(error["loc"][0]) if error["loc"] else "instance"
            raise InstanceParseError(error["msg"], line=section_lines.get(field), field=field) from exc

        self._check_semantics(instance, section_lines, detail_lines)
        return instance

    @staticmethod
    def _check_semantics(instance: InstanceFile, section_lines: dict[str, int], detail_lines: list[int]):
        try:
            matching = instance.given_matching()
        except InvalidMatchingError as exc:
            raise InstanceParseError(str(exc), line=section_lines.get("matching"), field="matching") from exc
        if instance.details is None:
            return
        details = []
        for row, line in zip(instance.details, detail_lines):
            try:
                details.append(Details(*row))
            except InvalidDetailsError as exc:
                raise InstanceParseError(str(exc), line=line, field="details") from exc
        if matching is not None:
            try:
                validate_details(instance.edge_coloring(), matching, details)
            except (InvalidDetailsError, ValueError) as exc:
                vertex = getattr(exc, "vertex", None)
                line = detail_lines[vertex] if vertex is not None else section_lines.get("details")
                raise InstanceParseError(str(exc), line=line, field="details") from exc

    def serialize(self, instance: InstanceFile) -> str:
        out = [f"{HEADER} {instance.version}", f"k {instance.k}", f"n {instance.n}"]
        if instance.seed is not None:
            out.append(f"seed {instance.seed}")
        out.append("points")
        out.extend(f"{x} {y}" for x, y in instance.points)
        out.append("colors")
        position = 0
        for i in range(instance.n - 1):
            width = instance.n - 1 - i
            out.append(" ".join(str(c) for c in instance.colors[position : position + width]))
            position += width
        if instance.matching is not None:
            out.append("matching")
            out.append(" ".join(str(q) for q in instance.matching))
        if instance.details is not None:
            out.append("details")
            out.extend(f"{c_prime} {m1} {m2}" for c_prime, m1, m2 in instance.details)
        out.append("end")
        return "\n".join(out) + "\n"
