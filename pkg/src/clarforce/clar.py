"""Clar covers and the Clar number.

The Clar number is the optimum of a 0/1 exact-cover program with one
variable per interior face and per edge and one equality row per vertex:
every vertex is covered exactly once, by a chosen face or a chosen edge.
Its LP relaxation is solved exactly; branch-and-bound on fractional face
variables takes over whenever the relaxation is not integral.
"""

from __future__ import annotations

import enum
import heapq
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import CoverInvalid, CoverNotMaximum, Infeasible, NoPerfectMatching
from .matching import enumerate_perfect_matchings, is_unique_perfect_matching, max_matching
from .planegraph import PlaneBipartiteGraph, induced_subgraph
from .simplex import solve_lp


class Certificate(enum.Enum):
    LP_INTEGRAL = "LPIntegral"
    BRANCH_AND_BOUND = "BranchAndBound"


@dataclass(frozen=True)
class ClarCover:
    faces: frozenset[int]
    edges: frozenset[int]


@dataclass(frozen=True)
class ClarResult:
    clar_number: int
    witness: ClarCover
    certificate: Certificate
    relaxation: Fraction  # root LP optimum
    nodes: int = 1


@dataclass(frozen=True)
class IlpModel:
    """Columns are faces (by id) then edges (by id); one row per vertex listing its columns."""

    n_faces: int
    n_edges: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_columns(self) -> int:
        return self.n_faces + self.n_edges

    def column_name(self, j: int) -> str:
        return f"xF{j}" if j < self.n_faces else f"yE{j - self.n_faces}"

    def to_lp_text(self) -> str:
        """CPLEX LP format."""
        names = [self.column_name(j) for j in range(self.n_columns)]
        obj = " + ".join(names[: self.n_faces]) if self.n_faces else f"0 {names[0]}" if names else "0"
        lines = ["\\ Clar number exact-cover model", "Maximize", f" obj: {obj}", "Subject To"]
        for v, row in enumerate(self.rows):
            lines.append(f" v{v}: {' + '.join(names[j] for j in row)} = 1")
        lines.append("Binary")
        lines.extend(f" {n}" for n in names)
        lines.append("End")
        return "\n".join(lines) + "\n"


def build_ilp(g: PlaneBipartiteGraph) -> IlpModel:
    rows: list[list[int]] = [[] for _ in range(g.n_vertices)]
    for f, boundary in enumerate(g.faces):
        for v in boundary:
            rows[v].append(f)
    for e, (u, v) in enumerate(g.edges):
        rows[u].append(g.n_faces + e)
        rows[v].append(g.n_faces + e)
    return IlpModel(g.n_faces, g.n_edges, tuple(tuple(r) for r in rows))


def solve_lp_relaxation(
    model: IlpModel,
    fixed_one: frozenset[int] = frozenset(),
    fixed_zero: frozenset[int] = frozenset(),
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exact LP optimum with some face variables fixed; returns (value, assignment).

    Fixing a face to 1 removes its rows and every column meeting them.
    """
    covered = {v for v, row in enumerate(model.rows) if any(f in fixed_one for f in row)}
    live_rows = [v for v in range(len(model.rows)) if v not in covered]
    dead_cols = set(fixed_zero)
    for v in covered:
        dead_cols.update(j for j in model.rows[v] if j not in fixed_one)
    for v in covered:
        hits = [f for f in model.rows[v] if f in fixed_one]
        if len(hits) > 1:
            raise Infeasible("fixed faces overlap")
    cols = [j for j in range(model.n_columns) if j not in dead_cols and j not in fixed_one]
    col_pos = {j: i for i, j in enumerate(cols)}
    rows = []
    for v in live_rows:
        row = {col_pos[j]: 1 for j in model.rows[v] if j in col_pos}
        if not row:
            raise Infeasible(f"vertex {v} cannot be covered")
        rows.append(row)
    objective = {col_pos[j]: 1 for j in cols if j < model.n_faces}
    sol = solve_lp(len(cols), rows, [1] * len(rows), objective)
    x = [Fraction(0)] * model.n_columns
    for j in fixed_one:
        x[j] = Fraction(1)
    for j, i in col_pos.items():
        x[j] = sol.x[i]
    return sol.value + len(fixed_one), tuple(x)


def complete_cover(g: PlaneBipartiteGraph, faces: frozenset[int]) -> ClarCover:
    used = {v for f in faces for v in g.faces[f]}
    rest = induced_subgraph(g, (v for v in range(g.n_vertices) if v not in used))
    m = max_matching(rest)
    if not m.perfect:
        raise CoverInvalid("face set leaves no perfect matching on the remainder")
    edges = frozenset(g.edge_id(rest.origin[a], rest.origin[b]) for a, b in (rest.edges[e] for e in m.edges))
    cover = ClarCover(faces, edges)
    check_clar_cover(g, cover)  # catches overlapping faces
    return cover


def _face_values_integral(x: tuple[Fraction, ...], n_faces: int) -> bool:
    return all(v.denominator == 1 for v in x[:n_faces])


def solve_clar(g: PlaneBipartiteGraph) -> ClarResult:
    """Exact Clar number with a maximum Clar cover as witness."""
    if g.n_vertices == 0:
        return ClarResult(0, ClarCover(frozenset(), frozenset()), Certificate.LP_INTEGRAL, Fraction(0))
    model = build_ilp(g)
    try:
        root_value, root_x = solve_lp_relaxation(model)
    except Infeasible:
        raise NoPerfectMatching("Clar program infeasible: graph has no perfect matching") from None

    if _face_values_integral(root_x, model.n_faces):
        faces = frozenset(f for f in range(model.n_faces) if root_x[f] == 1)
        cover = complete_cover(g, faces)
        check_clar_cover(g, cover)
        return ClarResult(len(faces), cover, Certificate.LP_INTEGRAL, root_value)

    # best-first branch-and-bound on the most fractional face variable
    best_value, best_faces = -1, None
    counter = itertools.count()
    heap = [(-root_value, next(counter), frozenset(), frozenset(), root_x)]
    nodes = 1
    while heap:
        neg_bound, _, ones, zeros, x = heapq.heappop(heap)
        if math.floor(-neg_bound) <= best_value:
            break
        if _face_values_integral(x, model.n_faces):
            faces = frozenset(f for f in range(model.n_faces) if x[f] == 1)
            if len(faces) > best_value:
                best_value, best_faces = len(faces), faces
            continue
        frac = [f for f in range(model.n_faces) if x[f].denominator != 1]
        branch = min(frac, key=lambda f: (abs(x[f] - Fraction(1, 2)), f))
        for child_ones, child_zeros in ((ones | {branch}, zeros), (ones, zeros | {branch})):
            try:
                value, cx = solve_lp_relaxation(model, child_ones, child_zeros)
            except Infeasible:
                continue
            nodes += 1
            if math.floor(value) > best_value:
                heapq.heappush(heap, (-value, next(counter), child_ones, child_zeros, cx))
    assert best_faces is not None
    cover = complete_cover(g, best_faces)
    check_clar_cover(g, cover)
    return ClarResult(best_value, cover, Certificate.BRANCH_AND_BOUND, root_value, nodes)


def check_clar_cover(g: PlaneBipartiteGraph, cover: ClarCover) -> None:
    """Raise CoverInvalid unless faces and edges cover every vertex exactly once."""
    seen = [0] * g.n_vertices
    for f in cover.faces:
        if not 0 <= f < g.n_faces:
            raise CoverInvalid(f"no face {f}")
        for v in g.faces[f]:
            seen[v] += 1
    for e in cover.edges:
        if not 0 <= e < g.n_edges:
            raise CoverInvalid(f"no edge {e}")
        for v in g.edges[e]:
            seen[v] += 1
    bad = [v for v, k in enumerate(seen) if k != 1]
    if bad:
        raise CoverInvalid(f"vertex {bad[0]} covered {seen[bad[0]]} times")


def face_size(g: PlaneBipartiteGraph) -> int:
    return min((len(f) for f in g.faces), default=4)


def _disjoint_face_sets(g: PlaneBipartiteGraph, limit: int) -> Iterator[tuple[int, ...]]:
    """Vertex-disjoint face sets in lexicographic order (prefix before extension)."""
    chosen: list[int] = []
    used: set[int] = set()

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(chosen)
        if len(chosen) == limit:
            return
        for f in range(start, g.n_faces):
            boundary = g.faces[f]
            if used.isdisjoint(boundary):
                chosen.append(f)
                used.update(boundary)
                yield from rec(f + 1)
                used.difference_update(boundary)
                chosen.pop()

    return rec(0)


def enumerate_clar_covers(
    g: PlaneBipartiteGraph, exactly_k_faces: int | None = None, budget: int | None = None
) -> Iterator[ClarCover]:
    """Every Clar cover: face sets in lexicographic order, then each perfect matching of the remainder.

    ``budget`` caps the perfect matchings enumerated per remainder.
    """
    limit = g.n_vertices // face_size(g)
    if exactly_k_faces is not None:
        limit = min(limit, exactly_k_faces)
    everything = range(g.n_vertices)
    for faces in _disjoint_face_sets(g, limit):
        if exactly_k_faces is not None and len(faces) != exactly_k_faces:
            continue
        used = {v for f in faces for v in g.faces[f]}
        rest = induced_subgraph(g, (v for v in everything if v not in used))
        for m in enumerate_perfect_matchings(rest, budget):
            edges = frozenset(g.edge_id(*(rest.origin[x] for x in rest.edges[e])) for e in m.edges)
            yield ClarCover(frozenset(faces), edges)


def clar_number_by_enumeration(g: PlaneBipartiteGraph, budget: int | None = None) -> int:
    """Largest face count of any Clar cover (brute-force oracle)."""
    for k in range(g.n_vertices // face_size(g), -1, -1):
        if next(enumerate_clar_covers(g, k, budget), None) is not None:
            return k
    raise NoPerfectMatching("graph has no Clar cover")


def maximum_clar_face_sets(g: PlaneBipartiteGraph, k: int, budget: int | None = None) -> list[frozenset[int]]:
    """Distinct face sets of all Clar covers with ``k`` faces."""
    out: list[frozenset[int]] = []
    for cover in enumerate_clar_covers(g, k, budget):
        if not out or out[-1] != cover.faces:
            out.append(cover.faces)
    return out


def verify_unique_after_removal(g: PlaneBipartiteGraph, cover: ClarCover, clar_number: int | None = None) -> bool:
    """Whether deleting the cover's face vertices leaves a unique perfect matching.

    ``cover`` must be a maximum Clar cover; ``clar_number`` may be passed to
    skip re-solving.
    """
    check_clar_cover(g, cover)
    if clar_number is None:
        clar_number = solve_clar(g).clar_number
    if len(cover.faces) < clar_number:
        raise CoverNotMaximum(f"cover has {len(cover.faces)} faces, Clar number is {clar_number}")
    used = {v for f in cover.faces for v in g.faces[f]}
    rest = induced_subgraph(g, (v for v in range(g.n_vertices) if v not in used))
    unique, _ = is_unique_perfect_matching(rest)
    return unique
