"""Elementary components and fixed bonds via the matching orientation.

With a perfect matching M, orient matched edges toward red vertices and all
other edges toward blue vertices. The strongly connected components of that
digraph with at least two vertices are the elementary components; edges
between components are fixed bonds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .errors import NoPerfectMatching
from .matching import (
    Matching,
    enumerate_perfect_matchings,
    oriented_successors,
    perfect_matching,
    require_perfect,
)
from .planegraph import PlaneBipartiteGraph, induced_subgraph


class BondClass(enum.Enum):
    DOUBLE = "double"
    FIXED_SINGLE = "fixed_single"
    FIXED_DOUBLE = "fixed_double"


@dataclass(frozen=True)
class Orientation:
    matching: Matching
    n_vertices: int
    arcs: tuple[tuple[int, int], ...]  # (tail, head) per edge id

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        succ: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for tail, head in self.arcs:
            succ[tail].append(head)
        return tuple(tuple(s) for s in succ)


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    graph: PlaneBipartiteGraph  # kind=General, origin maps back to the parent


@dataclass(frozen=True)
class Decomposition:
    components: tuple[Component, ...]
    bond_class: tuple[BondClass, ...]  # indexed by edge id
    component_of: tuple[int, ...]  # component index per vertex, -1 if none

    @property
    def fixed_bonds(self) -> list[int]:
        return [e for e, c in enumerate(self.bond_class) if c is not BondClass.DOUBLE]


def orient(g: PlaneBipartiteGraph, m: Matching) -> Orientation:
    require_perfect(g, m)
    succ = oriented_successors(g, m)
    arcs: list[tuple[int, int]] = [(-1, -1)] * g.n_edges
    for tail, out in enumerate(succ):
        for head, e in out:
            arcs[e] = (tail, head)
    return Orientation(m, g.n_vertices, tuple(arcs))


def strongly_connected_components(succ: list[list[int]] | tuple[tuple[int, ...], ...]) -> list[list[int]]:
    """Tarjan's lowlink algorithm, iterative. Components come out in reverse topological order."""
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            nbrs = succ[v]
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return out


def elementary_components(g: PlaneBipartiteGraph, reference: Matching | None = None) -> Decomposition:
    m = perfect_matching(g) if reference is None else reference
    d = orient(g, m)
    sccs = sorted((c for c in strongly_connected_components(d.successors) if len(c) >= 2), key=lambda c: c[0])
    component_of = [-1] * g.n_vertices
    for i, c in enumerate(sccs):
        for v in c:
            component_of[v] = i
    bond = []
    comp_edges: list[list[int]] = [[] for _ in sccs]
    for e, (u, v) in enumerate(g.edges):
        if component_of[u] != -1 and component_of[u] == component_of[v]:
            bond.append(BondClass.DOUBLE)
            comp_edges[component_of[u]].append(e)
        elif e in m.edges:
            bond.append(BondClass.FIXED_DOUBLE)
        else:
            bond.append(BondClass.FIXED_SINGLE)
    components = tuple(
        Component(tuple(c), tuple(es), induced_subgraph(g, c)) for c, es in zip(sccs, comp_edges)
    )
    return Decomposition(components, tuple(bond), tuple(component_of))


def is_elementary(g: PlaneBipartiteGraph) -> bool:
    d = elementary_components(g)
    return (
        len(d.components) == 1
        and len(d.components[0].vertices) == g.n_vertices
        and not d.fixed_bonds
    )


def enumerated_bond_classes(g: PlaneBipartiteGraph, budget: int | None = None) -> tuple[BondClass, ...]:
    """Bond classes read off a full enumeration of perfect matchings (oracle)."""
    hits = [0] * g.n_edges
    total = 0
    for m in enumerate_perfect_matchings(g, budget):
        total += 1
        for e in m.edges:
            hits[e] += 1
    if total == 0:
        raise NoPerfectMatching("graph has no perfect matching")
    return tuple(
        BondClass.FIXED_DOUBLE if h == total else BondClass.FIXED_SINGLE if h == 0 else BondClass.DOUBLE
        for h in hits
    )
