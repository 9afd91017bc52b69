"""Weighted simple graphs, graph-state stabilizers and graphical symplectic matroids."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import smatroid
from .errors import InvalidGraph, InvalidLabeling
from .ffmat import FieldSpec, FMatrix
from .smatroid import JElement, SymplecticMatroid
from .sympl import StabilizerMatrix, make_stabilizer

MAX_GRAPHICAL_EDGES = 16


@dataclass(frozen=True)
class WGraph:
    """Simple graph on vertices 1..order with nonzero integer edge weights."""

    order: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v, w in self.edges:
            if not (1 <= u <= self.order and 1 <= v <= self.order):
                raise InvalidGraph(f"edge ({u}, {v}) has a vertex outside 1..{self.order}")
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise InvalidGraph(f"repeated edge ({u}, {v})")
            if w == 0:
                raise InvalidGraph(f"edge ({u}, {v}) has zero weight")
            seen.add(key)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> "WGraph":
        out = []
        for e in edges:
            u, v, *rest = e
            out.append((int(u), int(v), int(rest[0]) if rest else 1))
        return cls(order, tuple(out))

    @classmethod
    def cycle(cls, n: int) -> "WGraph":
        return cls.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def path(cls, n: int) -> "WGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def complete(cls, n: int) -> "WGraph":
        return cls.from_edges(n, itertools.combinations(range(1, n + 1), 2))

    @classmethod
    def petersen(cls) -> "WGraph":
        outer = [(i, i % 5 + 1) for i in range(1, 6)]
        spokes = [(i, i + 5) for i in range(1, 6)]
        inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
        return cls.from_edges(10, outer + spokes + inner)

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b, _ in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def adjacency(self, p: int | None = None) -> list[list[int]]:
        a = [[0] * self.order for _ in range(self.order)]
        for u, v, w in self.edges:
            x = w % p if p else w
            a[u - 1][v - 1] = a[v - 1][u - 1] = x
        return a

    def relabel(self, perm: Sequence[int]) -> "WGraph":
        """Vertex v becomes perm[v - 1]."""
        return WGraph(self.order, tuple((perm[u - 1], perm[v - 1], w) for u, v, w in self.edges))


def graph_state_stabilizer(g: WGraph, field: FieldSpec | int) -> StabilizerMatrix:
    """[I | A] with A the weighted adjacency matrix: K_v = X_v prod Z_u(w_uv)."""
    if isinstance(field, int):
        field = FieldSpec(field)
    for u, v, w in g.edges:
        if w % field.p == 0:
            raise InvalidGraph(f"weight {w} of edge ({u}, {v}) vanishes in {field}")
    a = g.adjacency(field.p)
    n = g.order
    rows = [[int(i == j) for j in range(n)] + a[i] for i in range(n)]
    return make_stabilizer(FMatrix.from_rows(rows, field, 2 * n))


def lagrangian_from_graph(g: WGraph, field: FieldSpec | int = 2) -> SymplecticMatroid:
    return smatroid.bases_from_representation(graph_state_stabilizer(g, field).gens)


def girth(g: WGraph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    adj = {v: g.neighbors(v) for v in range(1, g.order + 1)}
    for root in adj:
        dist = {root: 0}
        parent = {root: 0}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y and parent[y] != x:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def min_degree(g: WGraph) -> int:
    return min((len(g.neighbors(v)) for v in range(1, g.order + 1)), default=0)


def connected_components(order: int, edges: Iterable[tuple[int, int]]) -> list[set[int]]:
    parent = list(range(order + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    comps: dict[int, set[int]] = {}
    for v in range(1, order + 1):
        comps.setdefault(find(v), set()).add(v)
    return list(comps.values())


# ---------------------------------------------------------------------------
# graphical symplectic matroids


@dataclass(frozen=True)
class EdgeLabeling:
    """Edge i (in edge-list order) carries the element ``labels[i]``."""

    labels: tuple[JElement, ...]

    def __post_init__(self):
        idx = sorted(e.index for e in self.labels)
        if idx != list(range(1, len(self.labels) + 1)):
            raise InvalidLabeling("edge labels must use each index 1..|E| exactly once")

    @classmethod
    def identity(cls, size: int) -> "EdgeLabeling":
        return cls(tuple(JElement(i) for i in range(1, size + 1)))

    def edge_of(self, index: int) -> int:
        """Position in the edge list of the edge labeled with ``index`` or ``index*``."""
        for pos, e in enumerate(self.labels):
            if e.index == index:
                return pos
        raise InvalidLabeling(f"no edge labeled {index}")


STAR_MODES = ("within", "relative")


def _cycle_edges(comp_edges: list[tuple[int, int, int]]) -> list[int]:
    """Edge tags on the unique cycle of a unicyclic edge list (leaf pruning)."""
    edges = list(comp_edges)
    while True:
        deg: dict[int, int] = {}
        for u, v, _ in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        keep = [e for e in edges if deg[e[0]] > 1 and deg[e[1]] > 1]
        if len(keep) == len(edges):
            return [tag for _, _, tag in edges]
        edges = keep


def is_graphical_independent(
    g: WGraph, lab: EdgeLabeling, s_mask: int, star_mode: str = "within"
) -> bool:
    """Every component of the edge image is a tree or has one cycle with an odd star count.

    ``within`` counts starred elements of the set on the cycle; ``relative``
    counts those whose sign differs from the labeling.
    """
    n = g.size
    chosen = []  # (u, v, starred-count contribution)
    for bit in smatroid.mask_bits(s_mask):
        e = JElement.from_bit(bit, n)
        pos = lab.edge_of(e.index)
        u, v, _ = g.edges[pos]
        if star_mode == "within":
            odd = int(e.starred)
        else:
            odd = int(e.starred != lab.labels[pos].starred)
        chosen.append((u, v, odd))
    for comp in connected_components(g.order, [(u, v) for u, v, _ in chosen]):
        ce = [c for c in chosen if c[0] in comp]
        if len(ce) == len(comp) - 1 or not ce:
            continue
        if len(ce) != len(comp):
            return False
        if sum(_cycle_edges(ce)) % 2 == 0:
            return False
    return True


def graphical_symplectic_matroid(
    g: WGraph, lab: EdgeLabeling | None = None, star_mode: str = "within"
) -> SymplecticMatroid:
    """Bases are the maximal independent admissible sets.

    In every connected component of ``g`` each free edge can be added with
    either sign, which flips the cycle parity, so maximal independent sets
    all have the maximum size; bases are therefore the independent sets of
    that size.
    """
    if star_mode not in STAR_MODES:
        raise InvalidLabeling(f"star mode must be one of {STAR_MODES}")
    n = g.size
    if n > MAX_GRAPHICAL_EDGES:
        raise InvalidGraph(f"{n} edges exceed the limit {MAX_GRAPHICAL_EDGES}")
    lab = lab or EdgeLabeling.identity(n)
    if len(lab.labels) != n:
        raise InvalidLabeling("labeling must cover every edge")
    r = graphical_rank(g)
    masks = [m for m in smatroid.admissible_masks(n, r) if is_graphical_independent(g, lab, m, star_mode)]
    if not masks:
        raise InvalidGraph("no independent set of the expected rank")
    return SymplecticMatroid(n, r, frozenset(masks))


def graphical_rank(g: WGraph) -> int:
    """Sum over components: |V_c| - 1 for trees, |V_c| otherwise."""
    total = 0
    for comp in connected_components(g.order, [(u, v) for u, v, _ in g.edges]):
        m = sum(1 for u, _, _ in g.edges if u in comp)
        total += len(comp) - 1 if m == len(comp) - 1 else len(comp)
    return total
