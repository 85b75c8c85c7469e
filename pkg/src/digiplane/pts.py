"""The ``.pts`` point-set text format.

    # comment lines start with '#'
    K2            <- plane header, first non-comment line: Z2 or K2
    0 0           <- one point per line, two integers
    1 -1

Blank lines are ignored. Duplicate points collapse on load with a
``DuplicatePointWarning``.
"""
from __future__ import annotations

import enum
import warnings
from pathlib import Path
from typing import Iterable

from .regions import Point, canonical


class Plane(enum.Enum):
    Z2 = "Z2"
    K2 = "K2"


class PointFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        where = f" at line {line}" if line is not None else ""
        prefix = f"{path}: " if path else ""
        super().__init__(f"{prefix}{message}{where}")
        self.line = line
        self.path = path


class DuplicatePointWarning(UserWarning):
    pass


def parse(text: str, path: str | None = None) -> tuple[Plane, frozenset]:
    plane: Plane | None = None
    points: set[Point] = set()
    duplicates: list[tuple[int, Point]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if plane is None:
            try:
                plane = Plane(line)
            except ValueError:
                raise PointFileError("missing plane header", number, path) from None
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise PointFileError(f"expected two integers, got {len(tokens)} tokens", number, path)
        try:
            p = (int(tokens[0]), int(tokens[1]))
        except ValueError:
            raise PointFileError(f"non-integer token in {line!r}", number, path) from None
        if p in points:
            duplicates.append((number, p))
        points.add(p)
    if plane is None:
        raise PointFileError("missing plane header", 1, path)
    if duplicates:
        lines = ", ".join(str(n) for n, _ in duplicates)
        warnings.warn(f"{path or 'input'}: {len(duplicates)} duplicate point(s) collapsed (lines {lines})",
                      DuplicatePointWarning, stacklevel=2)
    return plane, frozenset(points)


def format_points(plane: Plane, points: Iterable[Point], comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(Plane(plane).value)
    lines.extend(f"{x} {y}" for x, y in canonical(points))
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> tuple[Plane, frozenset]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as err:
        raise PointFileError(f"cannot read: {err}", None, str(path)) from err
    return parse(text, str(path))


def save(path: str | Path, plane: Plane, points: Iterable[Point], comment: str | None = None) -> None:
    try:
        Path(path).write_text(format_points(plane, points, comment), encoding="utf-8")
    except OSError as err:
        raise PointFileError(f"cannot write: {err}", None, str(path)) from err
