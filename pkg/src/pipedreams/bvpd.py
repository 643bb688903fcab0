"""Bumpless vertical-less diagrams and the top-degree formula they compute.

All of this is scoped to inverse fireworks permutations: only then does the
reduced column code fit the n x (n-1) grid, and only then is the
maximal-weight subset cut out by a tile census.
"""

from __future__ import annotations

from functools import lru_cache

from .diagrams import (
    Diagram,
    DiagramError,
    Kind,
    Tile,
    enumerate_structures,
    sort_key,
    trace,
    validate,
)
from .mvpd import is_top, mvpd_to_pd, pd_to_mvpd
from .permutations import Perm
from .polynomials import Monomial, Poly, weight_monomial

# A pipe turns north exactly once more than it turns east, so per row the
# west-north elbows count the entering pipe plus its south-east turns; that
# makes {cross, horizontal, west-north elbow} the weight-bearing set here.
WEIGHTY_BVPD = (Tile.HORIZONTAL, Tile.CROSS, Tile.ELBOW_WN)
EAST_EXIT_BVPD = (Tile.HORIZONTAL, Tile.CROSS, Tile.ELBOW_SE)


def _require_bvpd(d: Diagram) -> None:
    if d.kind is not Kind.BVPD:
        raise ValueError(f"expected a BVPD, got {d.kind.value}")


def _require_inverse_fireworks(w: Perm) -> None:
    if not w.is_inverse_fireworks():
        raise ValueError(f"{w.letters}: not inverse fireworks")


def weighty_cells_bvpd(d: Diagram) -> frozenset[tuple[int, int]]:
    """Positions of the weight-bearing tiles."""
    _require_bvpd(d)
    return frozenset((i, j) for i, j, t in d.cells() if t in WEIGHTY_BVPD)


def east_exit_cells(d: Diagram) -> frozenset[tuple[int, int]]:
    """Positions whose tile sends a pipe east into the next column."""
    _require_bvpd(d)
    return frozenset((i, j) for i, j, t in d.cells() if t in EAST_EXIT_BVPD)


def weight(d: Diagram) -> Monomial:
    """Row-product monomial of the weight-bearing tiles."""
    return weight_monomial(d.n, (i for i, _ in weighty_cells_bvpd(d)))


def is_member_bvpd(d: Diagram, w: Perm) -> bool:
    if d.kind is not Kind.BVPD or d.n != w.n or validate(d):
        return False
    return trace(d, record_paths=False).code == w.reduced_column_code()


@lru_cache(maxsize=None)
def enumerate_bvpd(w: Perm) -> tuple[Diagram, ...]:
    """All bumpless fillings whose traced code is w's reduced column code."""
    _require_inverse_fireworks(w)
    code = w.reduced_column_code()
    out = [
        d
        for d in enumerate_structures(Kind.BVPD, w.n, code.pipes)
        if trace(d, record_paths=False).code == code
    ]
    return tuple(sorted(out, key=sort_key))


def top_grothendieck_via_bvpd(w: Perm) -> Poly:
    """Unsigned sum of the diagram weights: the top-degree component."""
    _require_inverse_fireworks(w)
    n = w.n
    acc: dict[Monomial, int] = {}
    for d in enumerate_bvpd(w):
        m = weight(d)
        acc[m] = acc.get(m, 0) + 1
    return Poly(n, acc)


def mvpd_to_bvpd(d: Diagram, w: Perm) -> Diagram:
    """Drop the first column (horizontals at the entering rows, blanks
    elsewhere) and forget the marks."""
    _require_inverse_fireworks(w)
    if not is_top(d, w):
        raise ValueError("only maximal-weight diagrams drop their first column")
    for i in range(1, d.rows + 1):
        if d.tile(i, 1) not in (Tile.BLANK, Tile.HORIZONTAL):
            raise DiagramError(f"({i},1): first column holds {d.tile(i, 1).value!r}")
    grid = []
    for row in d.tiles:
        grid.append(
            tuple(Tile.ELBOW_SE if t is Tile.MARKED_SE else t for t in row[1:])
        )
    out = Diagram(Kind.BVPD, w.n, tuple(grid))
    if not is_member_bvpd(out, w):
        raise DiagramError("column deletion left the bumpless set")
    return out


def bvpd_to_mvpd(d: Diagram, w: Perm) -> Diagram:
    """Prepend a column of horizontals at the entering rows and mark every
    south-east elbow."""
    _require_inverse_fireworks(w)
    _require_bvpd(d)
    entering = d.entering_rows
    grid = []
    for i, row in enumerate(d.tiles, start=1):
        first = Tile.HORIZONTAL if i in entering else Tile.BLANK
        grid.append(
            (first,) + tuple(Tile.MARKED_SE if t is Tile.ELBOW_SE else t for t in row)
        )
    out = Diagram(Kind.MVPD, w.n, tuple(grid))
    problems = validate(out)
    if problems:
        raise DiagramError("column insertion broke the marked set: " + "; ".join(problems))
    if trace(out, record_paths=False).code != w.column_code():
        raise DiagramError("column insertion changed the code")
    return out


def bvpd_to_pd(d: Diagram, w: Perm) -> Diagram:
    """The composite bijection onto the maximal-cross pipe dreams."""
    return mvpd_to_pd(bvpd_to_mvpd(d, w), w)


def pd_to_bvpd(d: Diagram, w: Perm) -> Diagram:
    """Inverse of ``bvpd_to_pd``; expects a maximal-cross pipe dream."""
    return mvpd_to_bvpd(pd_to_mvpd(d, w), w)


def predicted_cross_cells(d: Diagram) -> frozenset[tuple[int, int]]:
    """Cross positions of the pipe dream image: column 1 at the entering
    rows, plus every east-exit cell shifted one column right."""
    _require_bvpd(d)
    first = frozenset((i, 1) for i in d.entering_rows)
    return first | frozenset((i, j + 1) for i, j in east_exit_cells(d))


def top_bvpd_weights(w: Perm) -> tuple[Monomial, ...]:
    """The weight multiset, in the canonical diagram order."""
    return tuple(weight(d) for d in enumerate_bvpd(w))
