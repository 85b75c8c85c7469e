from __future__ import annotations

import os
import re
from dataclasses import dataclass

DEFAULT_CAP = 100
CAP_ENV = "DIGIPLANE_WINDOW_CAP"


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


class WindowCapError(ValueError):
    pass


@dataclass(frozen=True)
class Window:
    """Closed integer rectangle ``[x_min, x_max] x [y_min, y_max]``."""

    x_min: int
    x_max: int
    y_min: int
    y_max: int

    def __post_init__(self) -> None:
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise ValueError(f"empty window {self}")

    @classmethod
    def sized(cls, width: int, height: int, origin: tuple[int, int] = (0, 0)) -> "Window":
        x, y = origin
        return cls(x, x + width - 1, y, y + height - 1)

    @classmethod
    def from_box(cls, box: tuple[int, int, int, int]) -> "Window":
        return cls(*box)

    @classmethod
    def parse(cls, text: str, origin: tuple[int, int] = (0, 0)) -> "Window":
        """Accept ``WxH`` (anchored at ``origin``) or ``x0:x1,y0:y1``."""
        m = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", text)
        if m:
            return cls.sized(int(m.group(1)), int(m.group(2)), origin)
        m = re.fullmatch(r"\s*(-?\d+):(-?\d+)\s*,\s*(-?\d+):(-?\d+)\s*", text)
        if m:
            return cls(*(int(g) for g in m.groups()))
        raise ValueError(f"bad window {text!r}; use WxH or x0:x1,y0:y1")

    @property
    def width(self) -> int:
        return self.x_max - self.x_min + 1

    @property
    def height(self) -> int:
        return self.y_max - self.y_min + 1

    @property
    def area(self) -> int:
        return self.width * self.height

    @property
    def box(self) -> tuple[int, int, int, int]:
        return self.x_min, self.x_max, self.y_min, self.y_max

    def points(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.x_min, self.x_max + 1) for y in range(self.y_min, self.y_max + 1)]

    def __contains__(self, p: object) -> bool:
        x, y = p  # type: ignore[misc]
        return self.x_min <= x <= self.x_max and self.y_min <= y <= self.y_max

    def check_cap(self, cap: int | None = None) -> None:
        limit = default_cap() if cap is None else cap
        if self.area > limit:
            raise WindowCapError(f"window area {self.area} exceeds cap {limit}")

    def to_json(self) -> dict[str, int]:
        return {"x_min": self.x_min, "x_max": self.x_max, "y_min": self.y_min, "y_max": self.y_max}

    def __str__(self) -> str:
        return f"{self.x_min}:{self.x_max},{self.y_min}:{self.y_max}"
