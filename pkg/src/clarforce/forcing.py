"""Forcing numbers of perfect matchings.

A subset S of a perfect matching M forces M exactly when no M-alternating
cycle avoids every endpoint of S, and an alternating cycle avoids those
endpoints unless S contains one of its matched edges. The forcing number
f(G; M) is therefore a minimum hitting set over alternating cycles, found
here by iterative deepening with cycles generated on demand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clar import ClarCover, ClarResult, solve_clar
from .decomp import BondClass, Decomposition, elementary_components
from .errors import BudgetExceeded, NoPerfectMatching
from .matching import (
    AlternatingCycle,
    Matching,
    directed_cycle,
    enumerate_perfect_matchings,
    make_matching,
    oriented_successors,
    require_perfect,
)
from .planegraph import PlaneBipartiteGraph

DEFAULT_MATCHING_BUDGET = 10**6
DEFAULT_DEPTH = 12


@dataclass(frozen=True)
class ForcingSet:
    edges: frozenset[int]
    matching: Matching


@dataclass(frozen=True)
class ComponentClar:
    vertices: tuple[int, ...]
    clar: ClarResult
    faces: frozenset[int]  # chosen faces, in parent face ids


@dataclass(frozen=True)
class ForcingReport:
    """Maximum forcing number with its supporting evidence.

    ``matching`` is built from a maximum Clar cover (each chosen face takes
    every other boundary edge) and attains F. ``packing`` holds the chosen
    faces as vertex-disjoint alternating cycles of that matching, a lower
    bound for its forcing number. ``f`` and ``forcing_set`` are filled only
    when the exact search was requested and fit the depth budget.
    """

    F: int
    components: tuple[ComponentClar, ...]
    decomposition: Decomposition
    cover: ClarCover
    matching: Matching
    packing: tuple[AlternatingCycle, ...]
    f: int | None = None
    forcing_set: ForcingSet | None = None
    f_min: int | None = None


class _CycleOracle:
    """Alternating-cycle search for one (graph, matching) pair."""

    def __init__(self, g: PlaneBipartiteGraph, m: Matching):
        require_perfect(g, m)
        self.g = g
        self.m = m
        self.succ = oriented_successors(g, m)

    def cycle_avoiding(self, chosen) -> AlternatingCycle | None:
        blocked = {v for e in chosen for v in self.g.edges[e]}
        return directed_cycle(self.succ, blocked)

    def completable(self, chosen: list[int], budget: int, above: int) -> bool:
        """Can ``chosen`` be extended by at most ``budget`` matched edges with id > ``above`` into a forcing set?"""
        cycle = self.cycle_avoiding(chosen)
        if cycle is None:
            return True
        if budget == 0:
            return False
        for e in cycle.matched_edges(self.m):
            if e > above:
                chosen.append(e)
                ok = self.completable(chosen, budget - 1, above)
                chosen.pop()
                if ok:
                    return True
        return False


def is_forcing(g: PlaneBipartiteGraph, m: Matching, edges) -> bool:
    return _CycleOracle(g, m).cycle_avoiding(edges) is None


def forcing_number_of(
    g: PlaneBipartiteGraph, m: Matching, max_depth: int = DEFAULT_DEPTH, lower: int = 0
) -> tuple[int, ForcingSet]:
    """Exact f(G; M) and the lexicographically smallest minimum forcing set.

    ``lower`` is a known lower bound (for example a disjoint cycle packing)
    where iterative deepening may start.
    """
    oracle = _CycleOracle(g, m)
    k = lower
    while not oracle.completable([], k, -1):
        k += 1
        if k > max_depth:
            raise BudgetExceeded(f"forcing number exceeds depth budget {max_depth}")
    chosen: list[int] = []
    for e in sorted(m.edges):
        if len(chosen) == k:
            break
        chosen.append(e)
        if not oracle.completable(chosen, k - len(chosen), e):
            chosen.pop()
    assert oracle.cycle_avoiding(chosen) is None
    return k, ForcingSet(frozenset(chosen), m)


def _cycles_through(succ, root: int, allowed: set[int]):
    """Simple directed cycles through ``root`` inside ``allowed``."""
    path_v = [root]
    path_e: list[int] = []
    on_path = {root}
    iters = [iter(succ[root])]
    while iters:
        step = next(iters[-1], None)
        if step is None:
            iters.pop()
            on_path.discard(path_v.pop())
            if path_e:
                path_e.pop()
            continue
        w, e = step
        if w == root:
            yield AlternatingCycle(tuple(path_v), tuple(path_e) + (e,))
        elif w in allowed and w not in on_path:
            path_v.append(w)
            path_e.append(e)
            on_path.add(w)
            iters.append(iter(succ[w]))


def max_disjoint_alternating_cycles(g: PlaneBipartiteGraph, m: Matching) -> tuple[AlternatingCycle, ...]:
    """Maximum set of vertex-disjoint M-alternating cycles (exact branch and bound).

    Branches on a vertex of some remaining cycle: either that vertex is left
    out, or one cycle through it is taken.
    """
    require_perfect(g, m)
    succ = oriented_successors(g, m)
    n = g.n_vertices
    memo: dict[frozenset[int], tuple[AlternatingCycle, ...]] = {}

    def best(allowed: frozenset[int]) -> tuple[AlternatingCycle, ...]:
        if len(allowed) < 4:
            return ()
        if allowed in memo:
            return memo[allowed]
        cycle = directed_cycle(succ, (v for v in range(n) if v not in allowed))
        if cycle is None:
            memo[allowed] = ()
            return ()
        v = min(cycle.vertices)
        result = best(allowed - {v})
        for c in _cycles_through(succ, v, allowed):
            if len(result) >= 1 + (len(allowed) - len(c)) // 4:
                continue
            cand = (c,) + best(allowed.difference(c.vertices))
            if len(cand) > len(result):
                result = cand
        memo[allowed] = result
        return result

    return best(frozenset(range(n)))


def brute_force_max_forcing(
    g: PlaneBipartiteGraph, budget: int = DEFAULT_MATCHING_BUDGET, max_depth: int = DEFAULT_DEPTH
) -> tuple[int, Matching]:
    """max f(G; M) over all perfect matchings; argmax is the first in enumeration order."""
    best, arg = -1, None
    for m in enumerate_perfect_matchings(g, budget):
        f, _ = forcing_number_of(g, m, max_depth)
        if f > best:
            best, arg = f, m
    if arg is None:
        raise NoPerfectMatching("graph has no perfect matching")
    return best, arg


def brute_force_min_forcing(
    g: PlaneBipartiteGraph, budget: int = DEFAULT_MATCHING_BUDGET, max_depth: int = DEFAULT_DEPTH
) -> int:
    values = [forcing_number_of(g, m, max_depth)[0] for m in enumerate_perfect_matchings(g, budget)]
    if not values:
        raise NoPerfectMatching("graph has no perfect matching")
    return min(values)


def clar_matching(g: PlaneBipartiteGraph, cover: ClarCover) -> tuple[Matching, tuple[AlternatingCycle, ...]]:
    """Perfect matching induced by a Clar cover, plus its faces as alternating cycles.

    Each chosen face contributes boundary edges 0, 2, 4, ... of its cyclic boundary.
    """
    edges = set(cover.edges)
    cycles = []
    for f in sorted(cover.faces):
        fe = g.face_edges[f]
        edges.update(fe[0::2])
        cycles.append(AlternatingCycle(g.faces[f], fe))
    return make_matching(g, edges), tuple(cycles)


def max_forcing_number(
    g: PlaneBipartiteGraph, compute_forcing_set: bool = False, max_depth: int = DEFAULT_DEPTH
) -> ForcingReport:
    """F(G) as the sum of Clar numbers of the elementary components.

    Fixed bonds contribute nothing. With ``compute_forcing_set`` the exact
    forcing number of the Clar-induced matching is also computed when F fits
    in ``max_depth``.
    """
    decomposition = elementary_components(g) if g.n_vertices else Decomposition((), (), ())
    parent_face = {boundary: f for f, boundary in enumerate(g.faces)}
    parts = []
    faces: set[int] = set()
    edges = {e for e, c in enumerate(decomposition.bond_class) if c is BondClass.FIXED_DOUBLE}
    for comp in decomposition.components:
        sub = comp.graph
        result = solve_clar(sub)
        comp_faces = frozenset(parent_face[tuple(sub.origin[v] for v in sub.faces[f])] for f in result.witness.faces)
        faces |= comp_faces
        edges.update(g.edge_id(*(sub.origin[x] for x in sub.edges[e])) for e in result.witness.edges)
        parts.append(ComponentClar(comp.vertices, result, comp_faces))
    cover = ClarCover(frozenset(faces), frozenset(edges))
    matching, packing = clar_matching(g, cover)
    F = sum(p.clar.clar_number for p in parts)
    f = forcing_set = None
    if compute_forcing_set and F <= max_depth:
        f, forcing_set = forcing_number_of(g, matching, max_depth, lower=len(packing))
    return ForcingReport(F, tuple(parts), decomposition, cover, matching, packing, f, forcing_set)
