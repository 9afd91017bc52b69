import itertools
import math
import random

import pytest

import instances
import oracles
from symatroid import catalog, ffmat, graphs, smatroid, sympl
from symatroid.errors import InvalidGraph, InvalidLabeling
from symatroid.ffmat import GF2
from symatroid.graphs import EdgeLabeling, WGraph
from symatroid.smatroid import AdmissibleSet, JElement


def sets(n, *texts):
    return {AdmissibleSet.parse(t, n) for t in texts}


# path 2-1-3 as in the representation examples
PATH_213 = WGraph.from_edges(3, [(1, 2), (1, 3)])
PAW = WGraph.from_edges(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
STAR4 = WGraph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


def test_graph_validation():
    with pytest.raises(InvalidGraph):
        WGraph.from_edges(2, [(1, 1)])
    with pytest.raises(InvalidGraph):
        WGraph.from_edges(2, [(1, 2), (2, 1)])
    with pytest.raises(InvalidGraph):
        WGraph.from_edges(2, [(1, 3)])
    with pytest.raises(InvalidGraph):
        WGraph.from_edges(2, [(1, 2, 0)])
    with pytest.raises(InvalidGraph):
        graphs.graph_state_stabilizer(WGraph.from_edges(2, [(1, 2, 3)]), 3)


def test_graph_state_examples():
    assert graphs.graph_state_stabilizer(PATH_213, GF2).gens == catalog.path3()
    assert graphs.graph_state_stabilizer(WGraph.complete(3), GF2).gens == catalog.k3()
    assert graphs.graph_state_stabilizer(WGraph(1, ()), GF2).gens.tolist() == [[1, 0]]


def test_graph_state_weighted():
    g = WGraph.from_edges(2, [(1, 2, 2)])
    s = graphs.graph_state_stabilizer(g, 3)
    assert s.gens.tolist() == [[1, 0, 0, 2], [0, 1, 2, 0]]
    assert [str(sympl.format_pauli(v)) for v in s.generators()] == ["X(1)_1 Z(2)_2", "Z(2)_1 X(1)_2"]


def test_graph_states_isotropic_and_lagrangian():
    rng = random.Random(1)
    for p in (2, 3):
        for _ in range(30):
            g = instances.random_graph(rng, rng.randint(1, 6))
            if p == 3:
                g = WGraph(g.order, tuple((u, v, rng.choice([1, 2])) for u, v, _ in g.edges))
            s = graphs.graph_state_stabilizer(g, p)
            assert sympl.is_isotropic(s.gens)
            m = graphs.lagrangian_from_graph(g, p)
            assert smatroid.is_lagrangian(m)


def test_lagrangian_from_graph_examples():
    assert set(graphs.lagrangian_from_graph(PATH_213).bases) == sets(3, "1 2 3", "1* 2* 3", "1* 2 3*")
    assert set(graphs.lagrangian_from_graph(WGraph.complete(3)).bases) == sets(
        3, "1 2 3", "1* 2* 3", "1* 2 3*", "1 2* 3*"
    )
    assert graphs.lagrangian_from_graph(WGraph(4, ())).masks == {0b1111}


def test_girth_and_degree_examples():
    assert graphs.girth(WGraph.cycle(5)) == 5 and graphs.min_degree(WGraph.cycle(5)) == 2
    assert graphs.girth(WGraph.complete(3)) == 3
    assert graphs.girth(WGraph.path(4)) == math.inf and graphs.min_degree(WGraph.path(4)) == 1
    assert graphs.girth(STAR4) == math.inf
    assert graphs.girth(WGraph.petersen()) == 5 and graphs.min_degree(WGraph.petersen()) == 3
    assert graphs.girth(WGraph.complete(4)) == 3
    assert graphs.girth(WGraph.cycle(7)) == 7


def _girth_brute(g):
    # shortest simple cycle by trying vertex sequences
    adj = {v: g.neighbors(v) for v in range(1, g.order + 1)}
    for length in range(3, g.order + 1):
        for seq in itertools.permutations(range(1, g.order + 1), length):
            if seq[0] != min(seq):
                continue
            if all(seq[i + 1] in adj[seq[i]] for i in range(length - 1)) and seq[0] in adj[seq[-1]]:
                return length
    return math.inf


def test_girth_matches_brute_force():
    rng = random.Random(2)
    for _ in range(60):
        g = instances.random_graph(rng, rng.randint(1, 7), rng.choice([0.3, 0.5]))
        assert graphs.girth(g) == _girth_brute(g)


def test_labeling_validation():
    with pytest.raises(InvalidLabeling):
        EdgeLabeling((JElement(1), JElement(1, True)))
    with pytest.raises(InvalidLabeling):
        graphs.graphical_symplectic_matroid(WGraph.complete(3), EdgeLabeling.identity(2))
    with pytest.raises(InvalidLabeling):
        graphs.graphical_symplectic_matroid(WGraph.complete(3), star_mode="sideways")


def test_graphical_tree_examples():
    for g in (WGraph.path(4), STAR4, PATH_213):
        m = graphs.graphical_symplectic_matroid(g)
        assert m.k == g.order - 1
        n = g.size
        assert m.masks == set(smatroid.admissible_masks(n, n))


def test_graphical_triangle_examples():
    m = graphs.graphical_symplectic_matroid(WGraph.complete(3))
    odd = sets(3, "1 2 3*", "1 2* 3", "1* 2 3", "1* 2* 3*")
    assert set(m.bases) == odd and m.k == 3
    k3 = graphs.lagrangian_from_graph(WGraph.complete(3))
    assert {smatroid.star(b) for b in m.bases} == set(k3.bases)


def _oracle_graphical_bases(g, lab, mode):
    n = g.size
    edge_list = [(u, v) for u, v, _ in g.edges]
    indep = set()
    for s in oracles.admissible_sets(n):
        elems = []
        for i, starred in s:
            pos = lab.edge_of(i)
            odd = starred if mode == "within" else starred != lab.labels[pos].starred
            elems.append((pos, int(odd)))
        if oracles.graphical_independent(edge_list, elems):
            indep.add(s)
    return {s for s in indep if not any(s < t for t in indep)}


@pytest.mark.parametrize("mode", graphs.STAR_MODES)
def test_graphical_bases_are_inclusion_maximal(mode):
    rng = random.Random(3)
    corpus = [WGraph.complete(3), PAW, WGraph.cycle(4), STAR4, WGraph.complete(4)]
    corpus += [instances.random_graph(rng, rng.randint(2, 5)) for _ in range(8)]
    for g in corpus:
        if not g.size or g.size > 6:
            continue
        labels = tuple(JElement(i, rng.random() < 0.5) for i in rng.sample(range(1, g.size + 1), g.size))
        lab = EdgeLabeling(labels)
        m = graphs.graphical_symplectic_matroid(g, lab, mode)
        got = {frozenset((e.index, e.starred) for e in b.elements()) for b in m.bases}
        assert got == _oracle_graphical_bases(g, lab, mode)
        assert m.k == graphs.graphical_rank(g)


def _flip(mask, n, indices):
    # swap i and i* for each listed index
    for i in indices:
        pair = 1 << (i - 1) | 1 << (n + i - 1)
        if mask & pair:
            mask ^= pair
    return mask


def test_relative_mode_is_within_mode_up_to_swaps():
    rng = random.Random(4)
    for g in (WGraph.complete(3), PAW, WGraph.cycle(5)):
        n = g.size
        for _ in range(5):
            signs = [rng.random() < 0.5 for _ in range(n)]
            lab = EdgeLabeling(tuple(JElement(i + 1, s) for i, s in enumerate(signs)))
            rel = graphs.graphical_symplectic_matroid(g, lab, "relative")
            wit = graphs.graphical_symplectic_matroid(g, lab, "within")
            flipped = [i + 1 for i, s in enumerate(signs) if s]
            assert rel.masks == {_flip(b, n, flipped) for b in wit.masks}


SWEEP = [
    WGraph.complete(3),
    WGraph.path(4),
    STAR4,
    WGraph.cycle(4),
    PAW,
    WGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]),
    WGraph.cycle(5),
]


@pytest.mark.parametrize("g", SWEEP, ids=lambda g: f"v{g.order}e{g.size}")
def test_graphical_maximality_sweep(g):
    n = g.size
    for signs in itertools.product((False, True), repeat=n):
        lab = EdgeLabeling(tuple(JElement(i + 1, s) for i, s in enumerate(signs)))
        for mode in graphs.STAR_MODES:
            if mode == "within" and any(signs):
                continue  # label signs do not enter the within-set rule
            m = graphs.graphical_symplectic_matroid(g, lab, mode)
            assert smatroid.check_maximality(m)


def test_graphical_maximality_six_edges():
    rng = random.Random(5)
    for g in (WGraph.complete(4), WGraph.cycle(6)):
        assert smatroid.check_maximality(graphs.graphical_symplectic_matroid(g))
        signs = [rng.random() < 0.5 for _ in range(g.size)]
        lab = EdgeLabeling(tuple(JElement(i + 1, s) for i, s in enumerate(signs)))
        assert smatroid.check_maximality(graphs.graphical_symplectic_matroid(g, lab, "relative"))


def test_graphical_rank_rule():
    assert graphs.graphical_rank(WGraph.path(5)) == 4
    assert graphs.graphical_rank(WGraph.complete(4)) == 4
    two = WGraph.from_edges(6, [(1, 2), (2, 3), (3, 1), (4, 5)])
    assert graphs.graphical_rank(two) == 3 + 1
    m = graphs.graphical_symplectic_matroid(two)
    assert m.k == 4


def test_graphical_edge_limit():
    with pytest.raises(InvalidGraph):
        graphs.graphical_symplectic_matroid(WGraph.complete(7))


def test_relabel_preserves_graph_state_rank():
    rng = random.Random(6)
    for _ in range(20):
        g = instances.random_graph(rng, 5)
        perm = list(range(1, 6))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert ffmat.rank(ffmat.FMatrix.from_rows(h.adjacency(2), 2)) == ffmat.rank(
            ffmat.FMatrix.from_rows(g.adjacency(2), 2)
        )
        assert len(graphs.lagrangian_from_graph(h).masks) == len(graphs.lagrangian_from_graph(g).masks)
