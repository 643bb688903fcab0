"""Tile grids shared by the three diagram species, plus the pipe tracer.

Coordinates are one-based ``(row, column)`` with row 1 at the top, so a
"lower" tile has a larger row index.  Pipes enter from the left edge, move
only north and east, and exit from the top edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple

from .permutations import Code


class DiagramError(Exception):
    """A grid that cannot be traced as a pipe diagram."""


class Tile(Enum):
    """Cell contents; the value doubles as the one-character render glyph."""

    BLANK = "."
    HORIZONTAL = "-"  # west-east strand
    CROSS = "+"  # west-east and south-north strands
    ELBOW_WN = "J"  # west-to-north arc
    ELBOW_SE = "r"  # south-to-east arc
    BUMP = "b"  # west-to-north plus south-to-east (the strands touch)
    MARKED_SE = "R"  # south-to-east arc carrying a mark

    @property
    def connects(self) -> frozenset[str]:
        return _CONNECTS[self]

    def has(self, side: str) -> bool:
        return side in _CONNECTS[self]


_CONNECTS: dict[Tile, frozenset[str]] = {
    Tile.BLANK: frozenset(),
    Tile.HORIZONTAL: frozenset("WE"),
    Tile.CROSS: frozenset("WESN"),
    Tile.ELBOW_WN: frozenset("WN"),
    Tile.ELBOW_SE: frozenset("SE"),
    Tile.BUMP: frozenset("WESN"),
    Tile.MARKED_SE: frozenset("SE"),
}

_CHAR_TO_TILE: dict[str, Tile] = {t.value: t for t in Tile}


class Kind(Enum):
    PD = "PD"
    MVPD = "MVPD"
    BVPD = "BVPD"


def grid_shape(kind: Kind, n: int) -> tuple[int, int]:
    return (n, n - 1) if kind is Kind.BVPD else (n, n)


_MVPD_FULL = (
    Tile.BLANK,
    Tile.HORIZONTAL,
    Tile.CROSS,
    Tile.ELBOW_WN,
    Tile.ELBOW_SE,
    Tile.BUMP,
    Tile.MARKED_SE,
)
_BVPD_FULL = (Tile.BLANK, Tile.HORIZONTAL, Tile.CROSS, Tile.ELBOW_WN, Tile.ELBOW_SE)


def allowed_tiles(kind: Kind, n: int, i: int, j: int) -> tuple[Tile, ...]:
    """The tile alphabet at cell (i, j): full alphabet on the staircase,
    west-north elbows (or blanks) on the anti-diagonal, blanks beyond."""
    s = i + j
    if kind is Kind.PD:
        if s <= n:
            return (Tile.CROSS, Tile.BUMP)
        if s == n + 1:
            return (Tile.ELBOW_WN,)
        return (Tile.BLANK,)
    if kind is Kind.MVPD:
        if s <= n:
            return _MVPD_FULL
        if s == n + 1:
            return (Tile.BLANK, Tile.ELBOW_WN)
        return (Tile.BLANK,)
    if s <= n - 1:
        return _BVPD_FULL
    if s == n:
        return (Tile.BLANK, Tile.ELBOW_WN)
    return (Tile.BLANK,)


@dataclass(frozen=True)
class Diagram:
    """An immutable rectangular tile grid tagged with its species."""

    kind: Kind
    n: int
    tiles: tuple[tuple[Tile, ...], ...]

    def __post_init__(self) -> None:
        rows, cols = grid_shape(self.kind, self.n)
        if len(self.tiles) != rows or any(len(r) != cols for r in self.tiles):
            raise ValueError(
                f"expected {rows}x{cols} grid for {self.kind.value} of size {self.n}"
            )

    @property
    def rows(self) -> int:
        return len(self.tiles)

    @property
    def cols(self) -> int:
        return len(self.tiles[0]) if self.tiles else 0

    def tile(self, i: int, j: int) -> Tile:
        return self.tiles[i - 1][j - 1]

    @cached_property
    def entering_rows(self) -> frozenset[int]:
        """Rows at which a pipe enters the left edge."""
        if self.cols == 0:
            return frozenset()
        return frozenset(i for i in range(1, self.rows + 1) if self.tile(i, 1).has("W"))

    def cells(self) -> Iterator[tuple[int, int, Tile]]:
        for i in range(1, self.rows + 1):
            for j in range(1, self.cols + 1):
                yield i, j, self.tiles[i - 1][j - 1]

    def with_tiles(self, updates: Mapping[tuple[int, int], Tile]) -> Diagram:
        grid = [list(row) for row in self.tiles]
        for (i, j), t in updates.items():
            grid[i - 1][j - 1] = t
        return Diagram(self.kind, self.n, tuple(tuple(r) for r in grid))

    def render_text(self) -> str:
        return "\n".join("".join(t.value for t in row) for row in self.tiles)

    def __str__(self) -> str:
        return self.render_text()

    @classmethod
    def parse_text(cls, kind: Kind, n: int, text: str) -> Diagram:
        rows = text.split("\n")
        grid: list[tuple[Tile, ...]] = []
        for line in rows:
            try:
                grid.append(tuple(_CHAR_TO_TILE[ch] for ch in line))
            except KeyError as exc:
                raise DiagramError(f"unknown tile character {exc.args[0]!r}") from None
        try:
            d = cls(kind, n, tuple(grid))
        except ValueError as exc:
            raise DiagramError(str(exc)) from None
        problems = validate(d)
        if problems:
            raise DiagramError("; ".join(problems))
        return d

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "rows": ["".join(t.value for t in row) for row in self.tiles],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Diagram:
        kind = Kind(data["kind"])
        return cls.parse_text(kind, int(data["n"]), "\n".join(data["rows"]))


class PipeStep(NamedTuple):
    row: int
    col: int
    enters: str  # "W" or "S"
    leaves: str  # "E" or "N"


class Crossing(NamedTuple):
    west: int
    south: int
    real: bool


@dataclass(frozen=True)
class TraceResult:
    """Everything the tracer learns about a diagram in one pass."""

    top_reading: tuple[int, ...]
    code: Code
    paths: Mapping[int, tuple[PipeStep, ...]]
    crossings: Mapping[tuple[int, int], Crossing]
    crossed_pairs: frozenset[frozenset[int]]

    def pipe_at(self, i: int, j: int) -> list[tuple[int, PipeStep]]:
        """Labels (with their steps) passing through cell (i, j)."""
        return [
            (label, step)
            for label, steps in self.paths.items()
            for step in steps
            if step.row == i and step.col == j
        ]


def trace(d: Diagram, *, record_paths: bool = True) -> TraceResult:
    """Propagate pipe labels cell by cell, bottom-to-top, left-to-right.

    At a cross, the first meeting of two labels is a real crossing (both
    strands pass straight through); a pair that has already crossed bounces
    instead, with the west label leaving north.
    """
    rows, cols = d.rows, d.cols
    entering = d.entering_rows
    south = [0] * (cols + 1)  # label heading north out of the row below, per column
    paths: dict[int, list[PipeStep]] = {r: [] for r in entering}
    crossings: dict[tuple[int, int], Crossing] = {}
    crossed: set[frozenset[int]] = set()
    for i in range(rows, 0, -1):
        west = i if i in entering else 0
        for j in range(1, cols + 1):
            t = d.tiles[i - 1][j - 1]
            w_in, s_in = west, south[j]
            if bool(w_in) != t.has("W") or bool(s_in) != t.has("S"):
                raise DiagramError(f"({i},{j}) {t.value!r}: pipe and tile edges disagree")
            n_out = e_out = 0
            if t is Tile.HORIZONTAL:
                e_out = w_in
            elif t is Tile.ELBOW_WN:
                n_out = w_in
            elif t is Tile.ELBOW_SE or t is Tile.MARKED_SE:
                e_out = s_in
            elif t is Tile.BUMP:
                n_out, e_out = w_in, s_in
            elif t is Tile.CROSS:
                pair = frozenset((w_in, s_in))
                if pair not in crossed:
                    crossed.add(pair)
                    crossings[(i, j)] = Crossing(w_in, s_in, True)
                    n_out, e_out = s_in, w_in
                else:
                    crossings[(i, j)] = Crossing(w_in, s_in, False)
                    n_out, e_out = w_in, s_in
            if record_paths:
                if w_in:
                    paths[w_in].append(PipeStep(i, j, "W", "N" if n_out == w_in else "E"))
                if s_in:
                    paths[s_in].append(PipeStep(i, j, "S", "N" if n_out == s_in else "E"))
            south[j] = n_out
            west = e_out
        if west:
            raise DiagramError(f"pipe {west} exits the right edge in row {i}")
    top = tuple(south[1 : cols + 1])
    return TraceResult(
        top_reading=top,
        code=Code(top, d.n),
        paths={r: tuple(steps) for r, steps in paths.items()},
        crossings=crossings,
        crossed_pairs=frozenset(crossed),
    )


def column_to_row_code(d: Diagram) -> Code:
    """Per column, the entering row of the pipe exiting there (0 if none)."""
    return trace(d, record_paths=False).code


def validate(d: Diagram) -> list[str]:
    """All invariant violations of the diagram's species (empty list = valid)."""
    out: list[str] = []
    rows, cols = d.rows, d.cols
    for i, j, t in d.cells():
        if t not in allowed_tiles(d.kind, d.n, i, j):
            out.append(f"({i},{j}): {t.value!r} not allowed in a {d.kind.value} there")
    for i, j, t in d.cells():
        if j == cols:
            if t.has("E"):
                out.append(f"({i},{j}): east connection leaves the grid")
        elif t.has("E") != d.tile(i, j + 1).has("W"):
            out.append(f"({i},{j})-({i},{j + 1}): east/west edges disagree")
        if i == rows:
            if t.has("S"):
                out.append(f"({i},{j}): south connection leaves the grid")
        elif t.has("S") != d.tile(i + 1, j).has("N"):
            out.append(f"({i},{j})-({i + 1},{j}): south/north edges disagree")
    if out:
        return out
    if d.kind is Kind.MVPD and any(t is Tile.MARKED_SE for _, _, t in d.cells()):
        out.extend(mark_violations(d, trace(d)))
    return out


def is_valid(d: Diagram) -> bool:
    return not validate(d)


def mark_violations(d: Diagram, tr: TraceResult) -> list[str]:
    """Marked elbows whose pipe has no horizontal tile in any lower row."""
    out = []
    for i, j, t in d.cells():
        if t is not Tile.MARKED_SE:
            continue
        hits = tr.pipe_at(i, j)
        if len(hits) != 1:
            out.append(f"({i},{j}): marked elbow without a unique pipe")
            continue
        label, _ = hits[0]
        if not pipe_has_lower_horizontal(d, tr, label, i):
            out.append(f"({i},{j}): mark on pipe {label} with no lower horizontal")
    return out


def pipe_has_lower_horizontal(d: Diagram, tr: TraceResult, label: int, row: int) -> bool:
    return any(
        d.tile(step.row, step.col) is Tile.HORIZONTAL and step.row > row
        for step in tr.paths[label]
    )


def enumerate_structures(kind: Kind, n: int, entering: Iterable[int]) -> Iterator[Diagram]:
    """All edge-consistent fillings with the given left-edge pipes.

    Marks are never placed (``MARKED_SE`` does not occur); callers that want
    marked diagrams expand the markable elbows afterwards.  Cells are chosen
    bottom-to-top, left-to-right, so each cell's west and south demands are
    already fixed when its tile is picked.
    """
    if kind is Kind.PD:
        raise ValueError("pipe dreams are enumerated by choice cells, not backtracking")
    rows, cols = grid_shape(kind, n)
    want = frozenset(entering)
    if any(not 1 <= r <= rows for r in want):
        raise ValueError(f"entering rows {sorted(want)} out of range 1..{rows}")
    if cols == 0:
        if want:
            return
        yield Diagram(kind, n, tuple(() for _ in range(rows)))
        return
    alphabet = {
        (i, j): tuple(t for t in allowed_tiles(kind, n, i, j) if t is not Tile.MARKED_SE)
        for i in range(1, rows + 1)
        for j in range(1, cols + 1)
    }
    cells = [(i, j) for i in range(rows, 0, -1) for j in range(1, cols + 1)]
    grid = [[Tile.BLANK] * cols for _ in range(rows)]
    north = [False] * (cols + 1)

    def fill(k: int, west: bool) -> Iterator[Diagram]:
        if k == len(cells):
            yield Diagram(kind, n, tuple(tuple(r) for r in grid))
            return
        i, j = cells[k]
        if j == 1:
            west = i in want
        s_dem = north[j]
        for t in alphabet[(i, j)]:
            c = t.connects
            if ("W" in c) != west or ("S" in c) != s_dem:
                continue
            if j == cols and "E" in c:
                continue
            grid[i - 1][j - 1] = t
            saved, north[j] = north[j], "N" in c
            yield from fill(k + 1, "E" in c)
            north[j] = saved
            grid[i - 1][j - 1] = Tile.BLANK

    yield from fill(0, False)


def sort_key(d: Diagram) -> str:
    """Canonical ordering key for sets of diagrams."""
    return d.render_text()
