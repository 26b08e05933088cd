"""Clar numbers and maximum forcing numbers of polyominoes and hexagonal systems."""

from .clar import ClarCover, ClarResult, build_ilp, enumerate_clar_covers, solve_clar, verify_unique_after_removal
from .decomp import BondClass, elementary_components, is_elementary
from .forcing import brute_force_max_forcing, forcing_number_of, max_forcing_number
from .matching import Matching, enumerate_perfect_matchings, max_matching, resonant_faces
from .planegraph import PlaneBipartiteGraph, parse_hexagonal, parse_polyomino

__all__ = [
    "BondClass",
    "ClarCover",
    "ClarResult",
    "Matching",
    "PlaneBipartiteGraph",
    "brute_force_max_forcing",
    "build_ilp",
    "elementary_components",
    "enumerate_clar_covers",
    "enumerate_perfect_matchings",
    "forcing_number_of",
    "is_elementary",
    "max_forcing_number",
    "max_matching",
    "parse_hexagonal",
    "parse_polyomino",
    "resonant_faces",
    "solve_clar",
    "verify_unique_after_removal",
]
