import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from clarforce.corpus import corpus  # noqa: E402
from clarforce.decomp import is_elementary  # noqa: E402
from clarforce.planegraph import Color, Kind, PlaneBipartiteGraph, parse_hexagonal, parse_polyomino  # noqa: E402

L_TROMINO = "##\n#."
T_TETROMINO = "###\n.#."
NON_ELEMENTARY_POLY = "##\n####\n..##"


def odd_face_triangle() -> PlaneBipartiteGraph:
    """Three 4-cycle faces overlapping pairwise in a triangle; LP optimum 3/2, Clar number 0."""
    a, b, c, x1, y1, x2, y2, x3, y3, r1, r2, r3 = range(12)
    R, B = Color.RED, Color.BLUE
    faces = ((c, x1, a, y1), (a, x2, b, y2), (b, x3, c, y3))
    edges = set()
    for f in faces:
        for i in range(4):
            u, v = f[i], f[(i + 1) % 4]
            edges.add((min(u, v), max(u, v)))
    for r, x, y in ((r1, x1, y1), (r2, x2, y2), (r3, x3, y3)):
        edges.add((min(r, x), max(r, x)))
        edges.add((min(r, y), max(r, y)))
    return PlaneBipartiteGraph(
        kind=Kind.GENERAL,
        positions=tuple((i, 0) for i in range(12)),
        colors=(R, R, R, B, B, B, B, B, B, R, R, R),
        edges=tuple(sorted(edges)),
        faces=faces,
    )


@pytest.fixture(scope="session")
def poly_corpus():
    return list(corpus("poly", 6))


@pytest.fixture(scope="session")
def hex_corpus():
    return list(corpus("hex", 4))


@pytest.fixture(scope="session")
def non_elementary():
    graphs = [g for _, g in corpus("poly", 8) if len(g.faces) == 8 and not is_elementary(g)]
    graphs += [g for _, g in corpus("hex", 5) if len(g.faces) == 5 and not is_elementary(g)]
    return graphs


@pytest.fixture(scope="session")
def small_graphs(poly_corpus, hex_corpus, non_elementary):
    """Corpus graphs plus selected non-elementary instances."""
    return [g for _, g in poly_corpus] + [g for _, g in hex_corpus] + non_elementary


@pytest.fixture
def single():
    return parse_polyomino("#")


@pytest.fixture
def domino():
    return parse_polyomino("##")


@pytest.fixture
def tromino():
    return parse_polyomino("###")


@pytest.fixture
def hexagon():
    return parse_hexagonal([(0, 0)])


# acceptance criteria report lines, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
