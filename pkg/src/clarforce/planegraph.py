"""Plane bipartite graphs built from square and hexagonal cell lattices.

Vertices, edges and faces are dense 0-based integer ids. Vertex ids follow
row-major order of lattice position ``(x, y)`` (sorted by ``y`` then ``x``,
``y`` growing downward), edge ids follow the sorted endpoint pair, and face
ids follow the row-major order of the cell each face came from.

Hexagonal lattice points use doubled integer coordinates: a pointy-top cell
with axial coordinates ``(q, r)`` is centred at ``(2q + r, 3r)`` and has its
corners at ``(x, y - 2)``, ``(x + 1, y - 1)``, ``(x + 1, y + 1)``,
``(x, y + 2)``, ``(x - 1, y + 1)``, ``(x - 1, y - 1)``.
"""

from __future__ import annotations

import enum
import hashlib
import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CutVertex, DisconnectedCells, DuplicateCell, EmptyInput, Hole, ParseError

Cell = tuple[int, int]
Point = tuple[int, int]

POLY_NEIGHBOURS = ((0, 1), (1, 0), (0, -1), (-1, 0))
POLY_CORNERS = ((1, 1), (1, -1), (-1, 1), (-1, -1))
HEX_NEIGHBOURS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"


class Kind(enum.Enum):
    POLYOMINO = "polyomino"
    HEXAGONAL = "hexagonal"
    GENERAL = "general"


@dataclass(frozen=True, eq=False)
class PlaneBipartiteGraph:
    """Immutable plane bipartite graph with its interior faces.

    ``cells`` holds the lattice cell of each face (same index as ``faces``).
    ``origin`` maps vertex ids back to the parent graph for subgraphs.
    """

    kind: Kind
    positions: tuple[Point, ...]
    colors: tuple[Color, ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]
    cells: tuple[Cell, ...] = ()
    origin: tuple[int, ...] | None = None

    @property
    def n_vertices(self) -> int:
        return len(self.positions)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in self.positions]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def vertex_faces(self) -> tuple[frozenset[int], ...]:
        at: list[set[int]] = [set() for _ in self.positions]
        for f, boundary in enumerate(self.faces):
            for v in boundary:
                at[v].add(f)
        return tuple(frozenset(s) for s in at)

    @cached_property
    def face_edges(self) -> tuple[tuple[int, ...], ...]:
        """Boundary edge ids of each face in cyclic order (edge i joins boundary[i], boundary[i+1])."""
        out = []
        for boundary in self.faces:
            k = len(boundary)
            out.append(tuple(self.edge_id(boundary[i], boundary[(i + 1) % k]) for i in range(k)))
        return tuple(out)

    @cached_property
    def fingerprint(self) -> str:
        payload = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def red_endpoint(self, e: int) -> int:
        a, b = self.edges[e]
        return a if self.colors[a] is Color.RED else b

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "vertices": [
                {"id": i, "color": c.value, "position": list(p)}
                for i, (c, p) in enumerate(zip(self.colors, self.positions))
            ],
            "edges": [list(e) for e in self.edges],
            "faces": [list(f) for f in self.faces],
        }


def faces_at(g: PlaneBipartiteGraph, v: int) -> frozenset[int]:
    return g.vertex_faces[v]


def _build(kind: Kind, cells: Sequence[Cell], corners, color_of) -> PlaneBipartiteGraph:
    cells = sorted(cells, key=lambda c: (c[1], c[0]) if kind is Kind.HEXAGONAL else c)
    cell_corners = [corners(c) for c in cells]
    points = sorted({p for cs in cell_corners for p in cs}, key=lambda p: (p[1], p[0]))
    index = {p: i for i, p in enumerate(points)}
    faces = tuple(tuple(index[p] for p in cs) for cs in cell_corners)
    edges = set()
    for f in faces:
        for i in range(len(f)):
            a, b = f[i], f[(i + 1) % len(f)]
            edges.add((min(a, b), max(a, b)))
    return PlaneBipartiteGraph(
        kind=kind,
        positions=tuple(points),
        colors=tuple(color_of(p) for p in points),
        edges=tuple(sorted(edges)),
        faces=faces,
        cells=tuple(cells),
    )


def _cell_groups(cells: Sequence[Cell], neighbours) -> int:
    """Number of groups of cells connected through ``neighbours``."""
    cellset = set(cells)
    seen: set[Cell] = set()
    groups = 0
    for start in cells:
        if start in seen:
            continue
        groups += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            a, b = queue.popleft()
            for da, db in neighbours:
                n = (a + da, b + db)
                if n in cellset and n not in seen:
                    seen.add(n)
                    queue.append(n)
    return groups


def _check_cells_connected(cells: Sequence[Cell], neighbours, corner_neighbours=()) -> None:
    if _cell_groups(cells, neighbours) == 1:
        return
    # cells meeting only at corners give a connected graph with a cut vertex
    if corner_neighbours and _cell_groups(cells, tuple(neighbours) + tuple(corner_neighbours)) == 1:
        raise CutVertex("cells meet only at a corner, which is a cut vertex of the graph")
    raise DisconnectedCells("cells do not form one connected region")


def _check_no_holes(g: PlaneBipartiteGraph) -> None:
    # connected plane graph whose bounded regions are all cells: V - E + F = 1
    holes = 1 - (g.n_vertices - g.n_edges + g.n_faces)
    if holes:
        raise Hole(f"region encloses {holes} non-cell interior region(s)")


def _poly_corners(cell: Cell) -> tuple[Point, ...]:
    r, c = cell
    return ((c, r), (c + 1, r), (c + 1, r + 1), (c, r + 1))


def _poly_color(p: Point) -> Color:
    return Color.RED if (p[0] + p[1]) % 2 == 0 else Color.BLUE


def _hex_corners(cell: Cell) -> tuple[Point, ...]:
    q, r = cell
    x, y = 2 * q + r, 3 * r
    return ((x, y - 2), (x + 1, y - 1), (x + 1, y + 1), (x, y + 2), (x - 1, y + 1), (x - 1, y - 1))


def _hex_color(p: Point) -> Color:
    return Color.RED if p[1] % 3 == 1 else Color.BLUE


def polyomino_from_cells(cells: Iterable[Cell]) -> PlaneBipartiteGraph:
    """Grid graph of a set of ``(row, col)`` unit cells."""
    cells = list(cells)
    if not cells:
        raise EmptyInput("no cells")
    if len(set(cells)) != len(cells):
        raise DuplicateCell("duplicate cell")
    _check_cells_connected(cells, POLY_NEIGHBOURS, POLY_CORNERS)
    g = _build(Kind.POLYOMINO, cells, _poly_corners, _poly_color)
    _check_no_holes(g)
    return g


def parse_polyomino(text: str) -> PlaneBipartiteGraph:
    """Parse a '#'/'.' grid (rows top to bottom) into its polyomino graph."""
    cells = []
    for r, line in enumerate(text.splitlines()):
        line = line.rstrip()
        for c, ch in enumerate(line):
            if ch == "#":
                cells.append((r, c))
            elif ch != ".":
                raise ParseError(f"unexpected character {ch!r} at row {r}, column {c}")
    if not cells:
        raise EmptyInput("no '#' cells in input")
    return polyomino_from_cells(cells)


def parse_hexagonal(coords: Iterable[Cell]) -> PlaneBipartiteGraph:
    """Hexagonal system from axial ``(q, r)`` cell coordinates."""
    cells = [(int(q), int(r)) for q, r in coords]
    if not cells:
        raise EmptyInput("no hexagonal cells")
    if len(set(cells)) != len(cells):
        raise DuplicateCell("duplicate hexagonal cell")
    # hexagons sharing a corner always share an edge, so no corner-only contact exists
    _check_cells_connected(cells, HEX_NEIGHBOURS)
    g = _build(Kind.HEXAGONAL, cells, _hex_corners, _hex_color)
    _check_no_holes(g)
    return g


def parse_hexagonal_text(text: str) -> PlaneBipartiteGraph:
    coords = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'q r', got {line!r}")
        try:
            coords.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer coordinate in {line!r}") from None
    return parse_hexagonal(coords)


def render(g: PlaneBipartiteGraph) -> str:
    """Text form accepted by the matching parser (grid for polyominoes, 'q r' lines for hexagons)."""
    if g.kind is Kind.POLYOMINO:
        r0 = min(r for r, _ in g.cells)
        c0 = min(c for _, c in g.cells)
        cellset = {(r - r0, c - c0) for r, c in g.cells}
        height = max(r for r, _ in cellset) + 1
        width = max(c for _, c in cellset) + 1
        rows = ["".join("#" if (r, c) in cellset else "." for c in range(width)).rstrip(".") for r in range(height)]
        return "\n".join(rows) + "\n"
    if g.kind is Kind.HEXAGONAL:
        return "".join(f"{q} {r}\n" for q, r in g.cells)
    raise ValueError("only lattice graphs can be rendered as text")


def induced_subgraph(g: PlaneBipartiteGraph, keep: Iterable[int]) -> PlaneBipartiteGraph:
    """Subgraph induced by ``keep``; faces are the faces of ``g`` that survive intact.

    The result may be disconnected; see :func:`connected_components`.
    """
    kept = sorted(set(keep))
    new_id = {v: i for i, v in enumerate(kept)}
    edges = tuple(sorted(
        (new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id
    ))
    faces, cells = [], []
    for f, boundary in enumerate(g.faces):
        if all(v in new_id for v in boundary):
            faces.append(tuple(new_id[v] for v in boundary))
            if g.cells:
                cells.append(g.cells[f])
    return PlaneBipartiteGraph(
        kind=Kind.GENERAL,
        positions=tuple(g.positions[v] for v in kept),
        colors=tuple(g.colors[v] for v in kept),
        edges=edges,
        faces=tuple(faces),
        cells=tuple(cells),
        origin=tuple(kept),
    )


def connected_components(g: PlaneBipartiteGraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n_vertices
    out = []
    for s in range(g.n_vertices):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            v = stack.pop()
            for e in g.incident[v]:
                w = g.other(e, v)
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def bar(n: int) -> PlaneBipartiteGraph:
    """1 x n straight polyomino."""
    return polyomino_from_cells((0, c) for c in range(n))


def rectangle(rows: int, cols: int) -> PlaneBipartiteGraph:
    return polyomino_from_cells((r, c) for r in range(rows) for c in range(cols))


def k2() -> PlaneBipartiteGraph:
    """A single edge, used as the smallest general graph with a perfect matching."""
    return PlaneBipartiteGraph(
        kind=Kind.GENERAL,
        positions=((0, 0), (1, 0)),
        colors=(Color.RED, Color.BLUE),
        edges=((0, 1),),
        faces=(),
    )
