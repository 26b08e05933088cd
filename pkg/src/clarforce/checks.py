"""Oracle cross-checks run by ``clarforce verify`` and ``clarforce corpus``.

Each check compares the fast pipeline against brute force on one graph and
yields PASS, FAIL, or SKIPPED when an oracle budget was exceeded.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .clar import (
    clar_number_by_enumeration,
    complete_cover,
    maximum_clar_face_sets,
    solve_clar,
    verify_unique_after_removal,
)
from .decomp import elementary_components, enumerated_bond_classes, is_elementary
from .errors import BudgetExceeded
from .forcing import DEFAULT_DEPTH, DEFAULT_MATCHING_BUDGET, brute_force_max_forcing, max_forcing_number
from .matching import resonant_faces
from .planegraph import PlaneBipartiteGraph


class Status(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: Status
    detail: str


@dataclass
class Budgets:
    matchings: int = DEFAULT_MATCHING_BUDGET
    depth: int = DEFAULT_DEPTH


def _lower_bound(g: PlaneBipartiteGraph, b: Budgets) -> tuple[bool, str]:
    F, _ = brute_force_max_forcing(g, b.matchings, b.depth)
    C = solve_clar(g).clar_number
    return F >= C, f"brute-force F={F}, C={C}"


def _resonance(g: PlaneBipartiteGraph, b: Budgets) -> tuple[bool, str]:
    resonant = resonant_faces(g)
    elementary = is_elementary(g)
    all_resonant = len(resonant) == g.n_faces
    return all_resonant == elementary, f"resonant {len(resonant)}/{g.n_faces} faces, elementary={elementary}"


def _unique_remainder(g: PlaneBipartiteGraph, b: Budgets) -> tuple[bool, str]:
    C = solve_clar(g).clar_number
    face_sets = maximum_clar_face_sets(g, C, b.matchings)
    failures = [
        sorted(fs) for fs in face_sets
        if not verify_unique_after_removal(g, complete_cover(g, fs), C)
    ]
    return not failures, f"{len(face_sets)} maximum cover face set(s), {len(failures)} with non-unique remainder"


def _equality(g: PlaneBipartiteGraph, b: Budgets) -> tuple[bool, str]:
    F_brute, _ = brute_force_max_forcing(g, b.matchings, b.depth)
    F_fast = max_forcing_number(g).F
    C_enum = clar_number_by_enumeration(g, b.matchings)
    return F_brute == F_fast == C_enum, f"brute-force F={F_brute}, component-Clar F={F_fast}, enumerated C={C_enum}"


def _decomposition(g: PlaneBipartiteGraph, b: Budgets) -> tuple[bool, str]:
    fast = elementary_components(g).bond_class
    oracle = enumerated_bond_classes(g, b.matchings)
    bad = [e for e, (x, y) in enumerate(zip(fast, oracle)) if x is not y]
    return not bad, f"{len(bad)} edge(s) classified differently" + (f" (first: {bad[0]})" if bad else "")


CHECKS: tuple[tuple[str, Callable[[PlaneBipartiteGraph, Budgets], tuple[bool, str]]], ...] = (
    ("F >= C lower bound", _lower_bound),
    ("all faces resonant <=> elementary", _resonance),
    ("unique 1-factor after removing maximum Clar faces", _unique_remainder),
    ("F = C (brute force, components, enumeration)", _equality),
    ("SCC bond classes = enumeration", _decomposition),
)


def run_checks(g: PlaneBipartiteGraph, budgets: Budgets | None = None) -> list[CheckResult]:
    budgets = budgets or Budgets()
    out = []
    for name, check in CHECKS:
        try:
            ok, detail = check(g, budgets)
        except BudgetExceeded as exc:
            out.append(CheckResult(name, Status.SKIPPED, str(exc)))
            continue
        out.append(CheckResult(name, Status.PASS if ok else Status.FAIL, detail))
    return out
