import pytest
from conftest import L_TROMINO, T_TETROMINO
from oracles import (
    alternating_cycles,
    fibonacci,
    max_matching_size_by_subsets,
    perfect_matchings_by_subsets,
    simple_cycles_undirected,
)

from clarforce.clar import maximum_clar_face_sets, solve_clar
from clarforce.decomp import is_elementary
from clarforce.errors import BudgetExceeded, NoPerfectMatching
from clarforce.matching import (
    count_perfect_matchings,
    enumerate_perfect_matchings,
    find_alternating_cycle,
    is_alternating_cycle,
    is_unique_perfect_matching,
    make_matching,
    max_matching,
    resonant_faces,
)
from clarforce.planegraph import PlaneBipartiteGraph, bar, induced_subgraph, k2, parse_polyomino


def test_max_matching_examples(single):
    m = max_matching(single)
    assert len(m) == 2 and m.perfect
    block = parse_polyomino("##\n##")
    m = max_matching(block)
    assert len(m) == 4 and not m.perfect
    l_tromino = parse_polyomino(L_TROMINO)
    m = max_matching(l_tromino)
    assert len(m) == max_matching_size_by_subsets(l_tromino.edges) == 4
    assert m.perfect


@pytest.mark.parametrize("text", ["#", "##", "###", L_TROMINO, T_TETROMINO, "##\n##", "##\n##\n#."])
def test_max_matching_size_matches_brute_force(text):
    g = parse_polyomino(text)
    assert len(max_matching(g)) == max_matching_size_by_subsets(g.edges)


@pytest.mark.parametrize(
    "text, count",
    [("#", 2), ("##", 3), ("###", 5), (L_TROMINO, 4), (T_TETROMINO, None), ("##\n##", 0)],
)
def test_enumeration_against_subset_oracle(text, count):
    g = parse_polyomino(text)
    expected = perfect_matchings_by_subsets(g.n_vertices, g.edges)
    got = [tuple(m.sorted_edges()) for m in enumerate_perfect_matchings(g)]
    if count is not None:
        assert len(got) == count
    assert got == sorted(expected)  # lexicographic, each once


@pytest.mark.parametrize("n", range(1, 11))
def test_bar_counts_are_fibonacci(n):
    assert count_perfect_matchings(bar(n)) == fibonacci(n + 2)


def test_enumeration_budget(tromino):
    assert count_perfect_matchings(tromino, budget=5) == 5
    with pytest.raises(BudgetExceeded):
        count_perfect_matchings(tromino, budget=4)


def test_unique_perfect_matching_examples(single):
    assert is_unique_perfect_matching(k2()) == (True, None)
    unique, other = is_unique_perfect_matching(single)
    assert not unique
    both = {frozenset(m.edges) for m in enumerate_perfect_matchings(single)}
    assert other.edges in both
    empty = induced_subgraph(single, [])
    assert is_unique_perfect_matching(empty) == (True, None)
    with pytest.raises(NoPerfectMatching):
        is_unique_perfect_matching(parse_polyomino("##\n##"))


def test_find_alternating_cycle_examples(single, domino):
    m = next(enumerate_perfect_matchings(single))
    cycle = find_alternating_cycle(single, m)
    assert sorted(cycle.vertices) == [0, 1, 2, 3]
    assert is_alternating_cycle(single, m, cycle)
    for v in range(4):
        assert find_alternating_cycle(single, m, {v}) is None

    vertical = make_matching(domino, [e for e, (u, v) in enumerate(domino.edges)
                                      if domino.positions[u][0] == domino.positions[v][0]])
    assert vertical.perfect and len(vertical) == 3
    middle = {v for v, p in enumerate(domino.positions) if p[0] == 1}
    # oracle: the 2x3 grid has 3 simple cycles; every alternating one uses a middle point
    cycles = simple_cycles_undirected(domino.n_vertices, domino.edges)
    assert len(cycles) == 3
    alt = alternating_cycles(domino.n_vertices, domino.edges, vertical.edges)
    assert all(middle & {v for e in c for v in domino.edges[e]} for c in alt)
    assert find_alternating_cycle(domino, vertical, middle) is None


def test_alternating_cycle_exists_iff_not_unique(small_graphs, poly_corpus):
    graphs = list(small_graphs)
    # add G - K' remainders, which have unique matchings
    for _, g in poly_corpus[:60]:
        C = solve_clar(g).clar_number
        for faces in maximum_clar_face_sets(g, C):
            used = {v for f in faces for v in g.faces[f]}
            graphs.append(induced_subgraph(g, set(range(g.n_vertices)) - used))
    for g in graphs:
        n = count_perfect_matchings(g)
        unique, _ = is_unique_perfect_matching(g)
        assert unique == (n == 1)
        m = max_matching(g)
        assert (find_alternating_cycle(g, m) is None) == (n == 1)


def test_witness_is_a_second_matching(small_graphs):
    for g in small_graphs[:80]:
        unique, other = is_unique_perfect_matching(g)
        if not unique:
            assert other.perfect
            assert other.edges != max_matching(g).edges


def test_resonant_faces_examples(single, tromino):
    assert resonant_faces(single) == {0}
    everything = set(range(tromino.n_vertices))
    oracle = {
        f for f, boundary in enumerate(tromino.faces)
        if perfect_matchings_by_subsets(
            len(everything) - 4,
            _relabel(tromino, everything - set(boundary)),
        )
    }
    assert resonant_faces(tromino) == oracle == {0, 1, 2}
    with pytest.raises(NoPerfectMatching):
        resonant_faces(parse_polyomino("##\n##"))


def _relabel(g, keep):
    idx = {v: i for i, v in enumerate(sorted(keep))}
    return [(idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx]


def test_resonance_of_t_tetromino_matches_enumeration():
    g = parse_polyomino(T_TETROMINO)
    pms = perfect_matchings_by_subsets(g.n_vertices, g.edges)
    oracle = {
        f for f in range(g.n_faces)
        if any(_face_alternates(g, f, set(pm)) for pm in pms)
    }
    assert resonant_faces(g) == oracle
    assert (oracle == set(range(g.n_faces))) == is_elementary(g)


def _face_alternates(g, f, pm):
    flags = [e in pm for e in g.face_edges[f]]
    return all(flags[i] != flags[(i + 1) % len(flags)] for i in range(len(flags)))


def test_resonance_iff_elementary(small_graphs, non_elementary):
    assert non_elementary
    for g in small_graphs:
        assert (resonant_faces(g) == set(range(g.n_faces))) == is_elementary(g)
    for g in non_elementary:
        assert resonant_faces(g) != set(range(g.n_faces))


def test_general_graph_without_faces():
    g = k2()
    assert isinstance(g, PlaneBipartiteGraph)
    assert resonant_faces(g) == frozenset()
