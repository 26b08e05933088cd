"""Perfect matchings, alternating cycles and face resonance."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BudgetExceeded, NoPerfectMatching, NotPerfect
from .planegraph import Color, PlaneBipartiteGraph, induced_subgraph


@dataclass(frozen=True)
class Matching:
    edges: frozenset[int]
    fingerprint: str
    perfect: bool

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[int]:
        return sorted(self.edges)


@dataclass(frozen=True)
class AlternatingCycle:
    """Simple cycle; ``edges[i]`` joins ``vertices[i]`` and ``vertices[i + 1]`` (cyclically)."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def matched_edges(self, m: Matching) -> list[int]:
        return sorted(e for e in self.edges if e in m.edges)


def make_matching(g: PlaneBipartiteGraph, edges: Iterable[int]) -> Matching:
    edges = frozenset(edges)
    covered = set()
    for e in edges:
        u, v = g.edges[e]
        if u in covered or v in covered:
            raise ValueError(f"edges share a vertex at edge {e}")
        covered.update((u, v))
    return Matching(edges, g.fingerprint, len(covered) == g.n_vertices)


def mate_array(g: PlaneBipartiteGraph, m: Matching) -> list[int]:
    """Matched edge id per vertex, -1 where uncovered."""
    mate = [-1] * g.n_vertices
    for e in m.edges:
        u, v = g.edges[e]
        mate[u] = mate[v] = e
    return mate


def require_perfect(g: PlaneBipartiteGraph, m: Matching) -> None:
    if m.fingerprint != g.fingerprint:
        raise ValueError("matching belongs to a different graph")
    if not m.perfect:
        raise NotPerfect(f"matching covers {2 * len(m)} of {g.n_vertices} vertices")


def max_matching(g: PlaneBipartiteGraph) -> Matching:
    """Hopcroft-Karp from the red side; deterministic in vertex and edge order."""
    reds = [v for v in range(g.n_vertices) if g.colors[v] is Color.RED]
    mate = [-1] * g.n_vertices  # partner vertex
    inf = float("inf")

    def bfs() -> dict[int, float]:
        dist: dict[int, float] = {}
        queue = deque()
        for u in reds:
            if mate[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for e in g.incident[u]:
                w = g.other(e, u)
                nxt = mate[w]
                if nxt == -1:
                    found = True
                elif dist[nxt] == inf:
                    dist[nxt] = dist[u] + 1
                    queue.append(nxt)
        return dist if found else {}

    def augment(root: int, dist: dict[int, float]) -> bool:
        # iterative DFS along layered graph
        stack = [(root, iter(g.incident[root]))]
        path: list[tuple[int, int]] = []
        while stack:
            u, it = stack[-1]
            advanced = False
            for e in it:
                w = g.other(e, u)
                nxt = mate[w]
                if nxt == -1:
                    path.append((u, w))
                    for a, b in path:
                        mate[a], mate[b] = b, a
                    return True
                if dist.get(nxt) == dist[u] + 1:
                    path.append((u, w))
                    stack.append((nxt, iter(g.incident[nxt])))
                    advanced = True
                    break
            if not advanced:
                dist[u] = inf
                stack.pop()
                if path:
                    path.pop()
        return False

    while True:
        dist = bfs()
        if not dist:
            break
        for u in reds:
            if mate[u] == -1:
                augment(u, dist)

    edges = {g.edge_id(u, mate[u]) for u in reds if mate[u] != -1}
    return make_matching(g, edges)


def perfect_matching(g: PlaneBipartiteGraph) -> Matching:
    m = max_matching(g)
    if not m.perfect:
        raise NoPerfectMatching(f"maximum matching covers {2 * len(m)} of {g.n_vertices} vertices")
    return m


def enumerate_perfect_matchings(g: PlaneBipartiteGraph, budget: int | None = None) -> Iterator[Matching]:
    """All perfect matchings, lexicographic by sorted edge ids.

    Branches on the lowest uncovered vertex, trying its edges in ascending
    id. Raises BudgetExceeded when more than ``budget`` matchings exist.
    """
    n = g.n_vertices
    covered = [False] * n
    chosen: list[int] = []
    count = 0

    def stranded(vs) -> bool:
        for v in vs:
            if covered[v]:
                continue
            if not any(not covered[g.other(e, v)] for e in g.incident[v]):
                return True
        return False

    def rec(start: int) -> Iterator[Matching]:
        nonlocal count
        v = start
        while v < n and covered[v]:
            v += 1
        if v == n:
            count += 1
            if budget is not None and count > budget:
                raise BudgetExceeded(f"more than {budget} perfect matchings")
            yield Matching(frozenset(chosen), g.fingerprint, True)
            return
        covered[v] = True
        for e in g.incident[v]:
            w = g.other(e, v)
            if covered[w]:
                continue
            covered[w] = True
            chosen.append(e)
            touched = [g.other(x, v) for x in g.incident[v]] + [g.other(x, w) for x in g.incident[w]]
            if not stranded(touched):
                yield from rec(v + 1)
            chosen.pop()
            covered[w] = False
        covered[v] = False

    return rec(0)


def count_perfect_matchings(g: PlaneBipartiteGraph, budget: int | None = None) -> int:
    return sum(1 for _ in enumerate_perfect_matchings(g, budget))


def oriented_successors(g: PlaneBipartiteGraph, m: Matching) -> list[list[tuple[int, int]]]:
    """Arcs of the matching orientation as ``succ[tail] = [(head, edge), ...]``.

    Matched edges point at their red end, the others at their blue end, so
    directed cycles are exactly the M-alternating cycles.
    """
    succ: list[list[tuple[int, int]]] = [[] for _ in range(g.n_vertices)]
    for e, (a, b) in enumerate(g.edges):
        red, blue = (a, b) if g.colors[a] is Color.RED else (b, a)
        if e in m.edges:
            succ[blue].append((red, e))
        else:
            succ[red].append((blue, e))
    return succ


def directed_cycle(succ: list[list[tuple[int, int]]], blocked: Iterable[int] = ()) -> AlternatingCycle | None:
    """Some simple directed cycle avoiding ``blocked`` vertices, or None."""
    n = len(succ)
    state = [0] * n  # 0 new, 1 on stack, 2 done
    for v in blocked:
        state[v] = 2
    pos = [-1] * n
    for root in range(n):
        if state[root]:
            continue
        path_v = [root]
        path_e: list[int] = []
        iters = [iter(succ[root])]
        state[root] = 1
        pos[root] = 0
        while iters:
            step = next(iters[-1], None)
            if step is None:
                v = path_v.pop()
                state[v] = 2
                iters.pop()
                if path_e:
                    path_e.pop()
                continue
            w, e = step
            if state[w] == 1:
                i = pos[w]
                return AlternatingCycle(tuple(path_v[i:]), tuple(path_e[i:]) + (e,))
            if state[w] == 0:
                state[w] = 1
                pos[w] = len(path_v)
                path_v.append(w)
                path_e.append(e)
                iters.append(iter(succ[w]))
    return None


def find_alternating_cycle(
    g: PlaneBipartiteGraph, m: Matching, forbidden_vertices: Iterable[int] = ()
) -> AlternatingCycle | None:
    require_perfect(g, m)
    return directed_cycle(oriented_successors(g, m), forbidden_vertices)


def is_alternating_cycle(g: PlaneBipartiteGraph, m: Matching, cycle: AlternatingCycle) -> bool:
    k = len(cycle.edges)
    if k < 4 or k % 2 or len(set(cycle.vertices)) != k:
        return False
    for i, e in enumerate(cycle.edges):
        if set(g.edges[e]) != {cycle.vertices[i], cycle.vertices[(i + 1) % k]}:
            return False
        if (e in m.edges) == (cycle.edges[(i + 1) % k] in m.edges):
            return False
    return True


def is_unique_perfect_matching(g: PlaneBipartiteGraph) -> tuple[bool, Matching | None]:
    """Whether ``g`` has exactly one perfect matching; otherwise also return a second one."""
    m = perfect_matching(g)
    cycle = find_alternating_cycle(g, m)
    if cycle is None:
        return True, None
    return False, Matching(m.edges.symmetric_difference(cycle.edges), g.fingerprint, True)


def has_perfect_matching(g: PlaneBipartiteGraph) -> bool:
    return max_matching(g).perfect


def resonant_faces(g: PlaneBipartiteGraph) -> frozenset[int]:
    """Faces whose boundary alternates for some perfect matching.

    A face is resonant exactly when deleting its boundary vertices leaves a
    graph with a perfect matching.
    """
    perfect_matching(g)
    everything = set(range(g.n_vertices))
    return frozenset(
        f for f, boundary in enumerate(g.faces)
        if has_perfect_matching(induced_subgraph(g, everything.difference(boundary)))
    )
