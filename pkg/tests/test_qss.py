import random

import pytest

import instances
from reference_values import QSS6_DEALER1, QSS6_LISTED_CIRCUITS
from symatroid import catalog, graphs, qss, smatroid, sympl
from symatroid.errors import Degenerate, IndexOutOfRange, NotIdenticallySelfDual, NotLagrangian
from symatroid.graphs import WGraph
from symatroid.qss import AccessStructure
from symatroid.smatroid import AdmissibleSet, OrdinaryMatroid, SymplecticMatroid


def fs(*sets):
    return {frozenset(s) for s in sets}


def structure(dealer, n, *sets):
    return AccessStructure(dealer, n, qss.minimalize(frozenset(s) for s in sets))


def test_access_structure_validation():
    with pytest.raises(Degenerate):
        AccessStructure(1, 3, (frozenset(),))
    with pytest.raises(IndexOutOfRange):
        AccessStructure(1, 3, (frozenset({1, 2}),))
    with pytest.raises(ValueError):
        AccessStructure(1, 3, (frozenset({2}), frozenset({2, 3})))
    assert qss.minimalize([frozenset({2, 3}), frozenset({2}), frozenset({2})]) == (frozenset({2}),)


def test_induced_examples(qss6_matroid, k3_matroid):
    a = qss.induced_access_structure(qss6_matroid, 1)
    assert set(a.minimal_sets) == QSS6_DEALER1
    assert set(qss.induced_access_structure(k3_matroid, 1).minimal_sets) == fs({2, 3})
    triv = smatroid.bases_from_representation(catalog.trivial(3))
    with pytest.raises(Degenerate):
        qss.induced_access_structure(triv, 1)
    with pytest.raises(NotLagrangian):
        qss.induced_access_structure(SymplecticMatroid.from_bases(2, ["1"]), 1)
    with pytest.raises(IndexOutOfRange):
        qss.induced_access_structure(k3_matroid, 4)


def test_dealer1_structure_from_listed_circuits():
    # applying the dealer map to the published circuit list gives the published structure
    sets = []
    for text in QSS6_LISTED_CIRCUITS:
        c = AdmissibleSet.parse(text, 6)
        idx = {e.index for e in c.elements()}
        if 1 in idx:
            sets.append(frozenset(idx - {1}))
    assert set(qss.minimalize(sets)) == QSS6_DEALER1


def test_validity_examples():
    assert qss.is_quantum_access_structure(AccessStructure(1, 6, tuple(sorted(QSS6_DEALER1, key=sorted))))
    assert not qss.is_quantum_access_structure(structure(1, 5, {2, 3}, {4, 5}))
    assert qss.is_quantum_access_structure(structure(1, 3, {2, 3}))
    assert not qss.is_quantum_access_structure(AccessStructure(1, 3, ()))


def test_report_examples(qss6_matroid):
    report = qss.secret_sharing_report(qss6_matroid)
    assert report[1].valid
    assert set(report) == set(range(1, 7))
    c5 = graphs.lagrangian_from_graph(WGraph.cycle(5))
    assert not any(v.valid for v in qss.secret_sharing_report(c5).values())
    triv = smatroid.bases_from_representation(catalog.trivial(2))
    rep = qss.secret_sharing_report(triv)
    assert all(v.degenerate and not v.valid for v in rep.values())


def test_necessary_condition_examples():
    assert qss.necessary_condition_applies(WGraph.cycle(5))
    assert not qss.necessary_condition_applies(WGraph.complete(3))
    assert qss.necessary_condition_applies(WGraph.petersen())
    assert not qss.necessary_condition_applies(WGraph.path(5))
    assert not qss.necessary_condition_applies(WGraph.cycle(4))


def test_necessary_condition_forces_invalid():
    rng = random.Random(1)
    hits = [WGraph.cycle(5), WGraph.cycle(6), WGraph.cycle(7), WGraph.petersen()]
    for _ in range(300):
        g = instances.random_graph(rng, rng.randint(5, 9), 0.35)
        if qss.necessary_condition_applies(g):
            hits.append(g)
    assert len(hits) > 4
    for g in hits:
        assert not qss.is_secret_sharing(graphs.lagrangian_from_graph(g))


def test_lift_examples():
    u24 = qss.lift_identically_self_dual(OrdinaryMatroid.uniform(2, 4))
    assert smatroid.is_lagrangian(u24) and len(u24.masks) == 6
    assert AdmissibleSet.parse("1 2 3* 4*", 4) in u24.bases
    assert set(qss.induced_access_structure(u24, 1).minimal_sets) == fs({2, 3}, {2, 4}, {3, 4})
    u12 = qss.lift_identically_self_dual(OrdinaryMatroid.uniform(1, 2))
    assert u12.masks == {AdmissibleSet.parse(t, 2).mask for t in ("1 2*", "1* 2")}
    assert set(qss.induced_access_structure(u12, 1).minimal_sets) == fs({2})
    with pytest.raises(NotIdenticallySelfDual):
        qss.lift_identically_self_dual(OrdinaryMatroid.uniform(1, 3))


def test_lifts_match_ordinary_structures():
    rng = random.Random(2)
    for om in instances.isd_blocks() + [instances.random_isd(rng) for _ in range(10)]:
        lifted = qss.lift_identically_self_dual(om)
        assert smatroid.is_self_dual(lifted)
        for i in range(1, om.n + 1):
            a = qss.induced_access_structure(lifted, i)
            assert a == qss.ordinary_access_structure(om, i)
            assert qss.is_quantum_access_structure(a)


def test_random_self_dual_lagrangians_are_secret_sharing():
    rng = random.Random(3)
    found = 0
    for _ in range(400):
        n = rng.randint(2, 6)
        s = sympl.make_stabilizer(sympl.random_isotropic(n, n, 2, rng))
        m = smatroid.bases_from_representation(s.gens)
        if not smatroid.is_self_dual(m):
            continue
        found += 1
        report = qss.secret_sharing_report(m)
        for v in report.values():
            # degenerate dealers (no authorized set) are not covered by the validity claim
            assert v.valid or v.degenerate
    assert found >= 5


def test_access_structures_are_antichains(qss6_matroid):
    rng = random.Random(4)
    ms = [qss6_matroid] + [graphs.lagrangian_from_graph(instances.random_graph(rng, 6)) for _ in range(10)]
    for m in ms:
        for v in qss.secret_sharing_report(m).values():
            if v.structure is None:
                continue
            sets = v.structure.minimal_sets
            assert not any(a < b for a in sets for b in sets)
            assert all(s <= v.structure.players for s in sets)
