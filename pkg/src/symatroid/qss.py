"""Access structures induced by Lagrangian matroids through a dealer index."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import smatroid
from .errors import Degenerate, IndexOutOfRange, NotIdenticallySelfDual, NotLagrangian
from .graphs import WGraph, girth, min_degree
from .smatroid import OrdinaryMatroid, SymplecticMatroid


def _sort_sets(sets: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    return tuple(sorted(sets, key=lambda s: sorted(s)))


def minimalize(sets: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    """Distinct inclusion-minimal members, sorted lexicographically."""
    uniq = set(sets)
    return _sort_sets(s for s in uniq if not any(t < s for t in uniq))


@dataclass(frozen=True)
class AccessStructure:
    dealer: int
    n: int
    minimal_sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not 1 <= self.dealer <= self.n:
            raise IndexOutOfRange(f"dealer {self.dealer} outside [1, {self.n}]")
        players = self.players
        for s in self.minimal_sets:
            if not s:
                raise Degenerate("access structure contains the empty set")
            if not s <= players:
                raise IndexOutOfRange(f"set {sorted(s)} is not a set of players")
        for s in self.minimal_sets:
            if any(t < s for t in self.minimal_sets):
                raise ValueError("minimal sets must form an antichain")

    @property
    def players(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - {self.dealer}

    def lines(self) -> list[str]:
        return ["{" + ", ".join(str(x) for x in sorted(s)) + "}" for s in self.minimal_sets]


def induced_access_structure(m: SymplecticMatroid, dealer: int) -> AccessStructure:
    """Strip i or i* from each circuit containing it, forget stars, keep minimal sets."""
    if not smatroid.is_lagrangian(m):
        raise NotLagrangian(f"rank {m.k} != n = {m.n}")
    n = m.n
    if not 1 <= dealer <= n:
        raise IndexOutOfRange(f"dealer {dealer} outside [1, {n}]")
    plain, starred = 1 << (dealer - 1), 1 << (n + dealer - 1)
    low = (1 << n) - 1
    sets = []
    for c in m.circuit_masks:
        for d in (plain, starred):
            if c & d:
                rest = c ^ d
                forgotten = (rest & low) | (rest >> n)
                sets.append(frozenset(b + 1 for b in smatroid.mask_bits(forgotten)))
    if frozenset() in sets:
        raise Degenerate(f"{{{dealer}}} or {{{dealer}*}} is a circuit")
    return AccessStructure(dealer, n, minimalize(sets))


def is_quantum_access_structure(a: AccessStructure) -> bool:
    """Nonempty and every two minimal authorized sets intersect (no-cloning)."""
    sets = a.minimal_sets
    if not sets:
        return False
    return all(s & t for i, s in enumerate(sets) for t in sets[i + 1:])


@dataclass(frozen=True)
class DealerVerdict:
    dealer: int
    structure: AccessStructure | None
    valid: bool
    degenerate: bool = False


def dealer_verdict(m: SymplecticMatroid, dealer: int) -> DealerVerdict:
    """Validity for one dealer; degenerate structures are invalid rather than fatal.

    A dealer is degenerate when {i} or {i*} is a circuit, or when it lies in
    no circuit at all, so that no player set is authorized.
    """
    try:
        a = induced_access_structure(m, dealer)
    except Degenerate:
        return DealerVerdict(dealer, None, False, degenerate=True)
    return DealerVerdict(dealer, a, is_quantum_access_structure(a), degenerate=not a.minimal_sets)


def secret_sharing_report(m: SymplecticMatroid) -> dict[int, DealerVerdict]:
    """Per-dealer verdicts for every dealer in [n]."""
    return {i: dealer_verdict(m, i) for i in range(1, m.n + 1)}


def is_secret_sharing(m: SymplecticMatroid) -> bool:
    return all(v.valid for v in secret_sharing_report(m).values())


def necessary_condition_applies(g: WGraph) -> bool:
    """Girth at least 5 and no vertex of degree 1 (isolated vertices excluded too)."""
    return girth(g) >= 5 and min_degree(g) >= 2


def ordinary_access_structure(om: OrdinaryMatroid, dealer: int) -> AccessStructure:
    """{A : A ∪ {i} a circuit of om}, minimalized."""
    bit = 1 << (dealer - 1)
    sets = [
        frozenset(b + 1 for b in smatroid.mask_bits(c ^ bit))
        for c in om.circuit_masks
        if c & bit
    ]
    if frozenset() in sets:
        raise Degenerate(f"{{{dealer}}} is a loop")
    return AccessStructure(dealer, om.n, minimalize(sets))


def lift_identically_self_dual(om: OrdinaryMatroid) -> SymplecticMatroid:
    """Bases B ∪ ([n] - B)* for each basis B of an identically self-dual matroid."""
    if not om.is_identically_self_dual():
        raise NotIdenticallySelfDual("matroid differs from its dual")
    n = om.n
    full = (1 << n) - 1
    return SymplecticMatroid(n, n, frozenset(b | ((full & ~b) << n) for b in om.masks))
