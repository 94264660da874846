"""Integer-lattice cell sets, rectilinear polygons, and torus quotients.

All coordinates are unit cells (x, y) with y growing northward.  Cell sets
are plain frozensets of (x, y) tuples; the canonical iteration order for
serialization is (y, x).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

Cell = tuple[int, int]
Vec = tuple[int, int]
CellSet = frozenset  # frozenset[Cell]


class GeometryError(ValueError):
    """Invalid polygon or degenerate lattice."""


def canonical(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    """Cells sorted by (y, x), duplicate-free."""
    return tuple(sorted(set(cells), key=lambda c: (c[1], c[0])))


def translate(cells: Iterable[Cell], v: Vec) -> CellSet:
    dx, dy = v
    return frozenset((x + dx, y + dy) for x, y in cells)


def bounding_box(cells: Iterable[Cell]) -> tuple[int, int, int, int]:
    """(xmin, ymin, xmax, ymax), max exclusive."""
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    return min(xs), min(ys), max(xs) + 1, max(ys) + 1


def is_connected(cells: Iterable[Cell]) -> bool:
    """True iff the shared-edge adjacency graph on the cells is connected.

    The empty set is not connected.  Diagonal contact does not count.
    """
    cells = frozenset(cells)
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


@dataclass(frozen=True)
class RectilinearPolygon:
    """A simple rectilinear polygon with integer vertices.

    Vertices are listed cyclically; consecutive edges must alternate between
    horizontal and vertical.
    """

    vertices: tuple[Cell, ...]

    def __post_init__(self):
        v = tuple(tuple(p) for p in self.vertices)
        object.__setattr__(self, "vertices", v)
        if len(v) < 4:
            raise GeometryError("polygon needs at least 4 vertices")
        if len(set(v)) != len(v):
            raise GeometryError("repeated vertex")
        for a, b in self._edges():
            if a[0] != b[0] and a[1] != b[1]:
                raise GeometryError(f"edge {a}-{b} is not axis-parallel")
            if a == b:
                raise GeometryError("zero-length edge")
        edges = self._edges()
        for i in range(len(edges)):
            (a, b), (c, d) = edges[i], edges[(i + 1) % len(edges)]
            if (a[0] == b[0]) == (c[0] == d[0]):
                raise GeometryError("consecutive edges do not alternate")
        self._check_simple()

    def _edges(self) -> list[tuple[Cell, Cell]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def _check_simple(self):
        edges = self._edges()
        k = len(edges)
        for i in range(k):
            for j in range(i + 1, k):
                adjacent = j == i + 1 or (i == 0 and j == k - 1)
                if _segments_touch(edges[i], edges[j], allow_endpoint=adjacent):
                    raise GeometryError("polygon is not simple")

    def shoelace_area(self) -> int:
        v = self.vertices
        s = 0
        for i in range(len(v)):
            x0, y0 = v[i]
            x1, y1 = v[(i + 1) % len(v)]
            s += x0 * y1 - x1 * y0
        area2 = abs(s)
        if area2 % 2:
            raise GeometryError("non-integer area")
        return area2 // 2


def _segments_touch(e1, e2, allow_endpoint: bool) -> bool:
    """Intersection test for axis-parallel segments."""
    (a, b), (c, d) = e1, e2

    def span(p, q, axis):
        lo, hi = sorted((p[axis], q[axis]))
        return lo, hi

    ax0, ax1 = span(a, b, 0)
    ay0, ay1 = span(a, b, 1)
    bx0, bx1 = span(c, d, 0)
    by0, by1 = span(c, d, 1)
    if ax0 > bx1 or bx0 > ax1 or ay0 > by1 or by0 > ay1:
        return False
    # Overlapping boxes: adjacent edges may meet at the shared vertex only.
    if allow_endpoint:
        shared = {a, b} & {c, d}
        if len(shared) == 1:
            p = shared.pop()
            # Touching anywhere beyond the shared point means overlap.
            ox0, ox1 = max(ax0, bx0), min(ax1, bx1)
            oy0, oy1 = max(ay0, by0), min(ay1, by1)
            return not (ox0 == ox1 == p[0] and oy0 == oy1 == p[1])
    return True


def rasterize(poly: RectilinearPolygon) -> CellSet:
    """Cells whose centers lie inside the polygon (even-odd rule).

    Integer vertices mean cell centers never sit on an edge, so the even-odd
    scanline count is exact; the result size equals the shoelace area.
    """
    verts = poly.vertices
    vertical = []
    for i in range(len(verts)):
        a, b = verts[i], verts[(i + 1) % len(verts)]
        if a[0] == b[0]:
            lo, hi = sorted((a[1], b[1]))
            vertical.append((a[0], lo, hi))
    ymin = min(y for _, y in verts)
    ymax = max(y for _, y in verts)
    cells = set()
    for y in range(ymin, ymax):
        cy = y + 0.5
        xs = sorted(x for x, lo, hi in vertical if lo < cy < hi)
        for i in range(0, len(xs), 2):
            for x in range(xs[i], xs[i + 1]):
                cells.add((x, y))
    result = frozenset(cells)
    if len(result) != poly.shoelace_area():
        raise GeometryError("rasterization does not match shoelace area")
    return result


@dataclass(frozen=True)
class TorusLattice:
    """Integer lattice defining a plane quotient (a torus of |det| cells)."""

    b1: Vec
    b2: Vec
    _hnf: tuple[int, int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "b1", tuple(self.b1))
        object.__setattr__(self, "b2", tuple(self.b2))
        if self.det == 0:
            raise GeometryError("degenerate lattice")
        object.__setattr__(self, "_hnf", self._compute_hnf())

    @property
    def det(self) -> int:
        return self.b1[0] * self.b2[1] - self.b1[1] * self.b2[0]

    @property
    def num_cells(self) -> int:
        return abs(self.det)

    def _compute_hnf(self) -> tuple[int, int, int]:
        """Basis ((A, 0), (C, B)) of the same lattice, 0 <= C < A, A*B = |det|.

        B is the gcd of the basis y-components; reduction maps every point
        to the rectangle [0, A) x [0, B).
        """
        y1, y2 = self.b1[1], self.b2[1]
        g, m, n = _ext_gcd(y1, y2)
        # m*y1 + n*y2 == g > 0 (not both y-components are zero: det != 0)
        ex = m * self.b1[0] + n * self.b2[0]
        a = self.num_cells // g
        return a, g, ex % a

    @property
    def hnf(self) -> tuple[int, int, int]:
        """(A, B, C) with lattice basis (A, 0), (C, B)."""
        return self._hnf

    def reduce(self, c: Cell) -> Cell:
        """Canonical representative of c modulo the lattice."""
        a, b, cc = self._hnf
        x, y = c
        k = y // b
        return ((x - k * cc) % a, y - k * b)

    def contains(self, v: Vec) -> bool:
        return self.reduce(v) == (0, 0)

    def representatives(self):
        """Iterate the |det| canonical representatives."""
        a, b, _ = self._hnf
        for y in range(b):
            for x in range(a):
                yield (x, y)


def _ext_gcd(p: int, q: int) -> tuple[int, int, int]:
    """(g, m, n) with m*p + n*q == g == gcd(p, q) > 0."""
    if p == 0 and q == 0:
        raise GeometryError("gcd(0, 0) undefined")
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def reduce_mod(c: Cell, lattice: TorusLattice) -> Cell:
    return lattice.reduce(c)


@dataclass(frozen=True)
class Polyomino:
    """A named, non-empty, edge-connected set of unit cells."""

    cells: CellSet
    name: str

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(tuple(c) for c in self.cells))
        if not self.cells:
            raise GeometryError(f"polyomino {self.name!r} is empty")
        if not is_connected(self.cells):
            raise GeometryError(f"polyomino {self.name!r} is not edge-connected")

    def __len__(self) -> int:
        return len(self.cells)

    def canonical_cells(self) -> tuple[Cell, ...]:
        return canonical(self.cells)
