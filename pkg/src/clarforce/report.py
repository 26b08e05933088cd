"""Machine-readable reports and their JSON schemas."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from functools import lru_cache
from importlib import resources

import jsonschema

from .clar import build_ilp, solve_clar
from .decomp import BondClass, Decomposition
from .errors import InvariantViolation
from .forcing import DEFAULT_DEPTH, ForcingReport, max_forcing_number
from .planegraph import PlaneBipartiteGraph


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    text = resources.files("clarforce").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def validate(doc: dict, name: str = "report") -> None:
    jsonschema.validate(doc, load_schema(name))


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


class Timer:
    def __init__(self):
        self.ms: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.ms[name] = round((time.perf_counter() - start) * 1000, 3)


def _component_docs(g: PlaneBipartiteGraph, report: ForcingReport) -> list[dict]:
    parent_face = {boundary: f for f, boundary in enumerate(g.faces)}
    docs = []
    for comp, part in zip(report.decomposition.components, report.components):
        sub = comp.graph
        docs.append({
            "vertices": list(comp.vertices),
            "edges": list(comp.edges),
            "faces": sorted(parent_face[tuple(sub.origin[v] for v in f)] for f in sub.faces),
            "clar_number": part.clar.clar_number,
            "certificate": part.clar.certificate.value,
            "relaxation": str(part.clar.relaxation),
            "cover_faces": sorted(part.faces),
        })
    return docs


def _bond_lists(d: Decomposition) -> dict:
    return {
        "fixed_single": [e for e, c in enumerate(d.bond_class) if c is BondClass.FIXED_SINGLE],
        "fixed_double": [e for e, c in enumerate(d.bond_class) if c is BondClass.FIXED_DOUBLE],
    }


def build_report(
    g: PlaneBipartiteGraph,
    fmt: str,
    timer: Timer | None = None,
    max_depth: int = DEFAULT_DEPTH,
    timings: bool = True,
) -> dict:
    """Run the full pipeline and assemble the report.

    Raises InvariantViolation if the component-wise F disagrees with the
    whole-graph Clar number or with the exact forcing number of the
    Clar-induced matching.
    """
    timer = timer or Timer()
    with timer.phase("forcing"):
        fr = max_forcing_number(g, compute_forcing_set=True, max_depth=max_depth)
    with timer.phase("clar"):
        whole = solve_clar(g)
    if whole.clar_number != fr.F:
        raise InvariantViolation(
            f"F(G) = C(G) violated: component sum F={fr.F}, whole-graph Clar number {whole.clar_number}"
        )
    if fr.f is not None:
        if fr.f != fr.F:
            raise InvariantViolation(
                f"F(G) = C(G) violated: Clar-induced matching has forcing number {fr.f}, expected {fr.F}"
            )
        if len(fr.packing) > fr.f:
            raise InvariantViolation(f"packing of {len(fr.packing)} cycles exceeds forcing number {fr.f}")
    d = fr.decomposition
    doc = {
        "fingerprint": g.fingerprint,
        "format": fmt,
        "graph": g.to_dict(),
        "stats": {"vertices": g.n_vertices, "edges": g.n_edges, "faces": g.n_faces},
        "elementary": len(d.components) == 1 and len(d.components[0].vertices) == g.n_vertices
        and not d.fixed_bonds,
        "components": _component_docs(g, fr),
        "fixed_bonds": _bond_lists(d),
        "clar_number": whole.clar_number,
        "F": fr.F,
        "certificate": whole.certificate.value,
        "relaxation": str(whole.relaxation),
        "witnesses": {
            "cover": {"faces": sorted(fr.cover.faces), "edges": sorted(fr.cover.edges)},
            "matching": fr.matching.sorted_edges(),
            "packing": [list(c.edges) for c in fr.packing],
            "forcing_number": fr.f,
            "forcing_set": sorted(fr.forcing_set.edges) if fr.forcing_set else None,
        },
    }
    if timings:
        doc["timings_ms"] = dict(sorted(timer.ms.items()))
    validate(doc, "report")
    return doc


def build_decomposition_doc(g: PlaneBipartiteGraph, d: Decomposition, fmt: str) -> dict:
    parent_face = {boundary: f for f, boundary in enumerate(g.faces)}
    doc = {
        "fingerprint": g.fingerprint,
        "format": fmt,
        "graph": g.to_dict(),
        "elementary": len(d.components) == 1 and len(d.components[0].vertices) == g.n_vertices
        and not d.fixed_bonds,
        "components": [
            {
                "vertices": list(c.vertices),
                "edges": list(c.edges),
                "faces": sorted(parent_face[tuple(c.graph.origin[v] for v in f)] for f in c.graph.faces),
            }
            for c in d.components
        ],
        "bond_class": [c.value for c in d.bond_class],
    }
    validate(doc, "decomposition")
    return doc


def lp_dump(g: PlaneBipartiteGraph) -> str:
    return build_ilp(g).to_lp_text()
