"""Fixed polyominoes and hexagonal systems, up to translation."""

from __future__ import annotations

from typing import Iterator

from .errors import ParseError
from .matching import has_perfect_matching
from .planegraph import HEX_NEIGHBOURS, POLY_NEIGHBOURS, PlaneBipartiteGraph, parse_hexagonal, polyomino_from_cells

Shape = tuple[tuple[int, int], ...]


def _normalize(cells) -> Shape:
    a0 = min(a for a, _ in cells)
    b0 = min(b for _, b in cells)
    return tuple(sorted((a - a0, b - b0) for a, b in cells))


def fixed_shapes(n: int, neighbours) -> list[Shape]:
    """All edge-connected n-cell shapes modulo translation, sorted."""
    if n < 1:
        return []
    level = {((0, 0),)}
    for _ in range(n - 1):
        grown = set()
        for shape in level:
            cells = set(shape)
            for a, b in shape:
                for da, db in neighbours:
                    c = (a + da, b + db)
                    if c not in cells:
                        grown.add(_normalize(cells | {c}))
        level = grown
    return sorted(level)


def fixed_polyominoes(n: int) -> list[Shape]:
    """``(row, col)`` cells of every fixed n-omino."""
    return fixed_shapes(n, POLY_NEIGHBOURS)


def fixed_hexagonal_systems(n: int) -> list[Shape]:
    """Axial ``(q, r)`` cells of every fixed n-hexagon system."""
    return fixed_shapes(n, HEX_NEIGHBOURS)


def corpus(kind: str, max_cells: int) -> Iterator[tuple[Shape, PlaneBipartiteGraph]]:
    """Shapes with 1..max_cells cells whose graphs are valid and have a perfect matching.

    Shapes enclosing holes are skipped since they are not polyominoes or
    hexagonal systems in the strict sense.
    """
    if kind not in ("poly", "hex"):
        raise ValueError(f"unknown lattice kind {kind!r}")
    for n in range(1, max_cells + 1):
        shapes = fixed_polyominoes(n) if kind == "poly" else fixed_hexagonal_systems(n)
        for shape in shapes:
            try:
                g = polyomino_from_cells(shape) if kind == "poly" else parse_hexagonal(shape)
            except ParseError:
                continue
            if has_perfect_matching(g):
                yield shape, g
