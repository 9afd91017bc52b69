"""Restricted Tutte-Martin and interlace polynomials.

Both are sums of powers of (x - 1), so they are stored by their
coefficients in that basis and only expanded into monomials for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import ffmat, smatroid
from .errors import CapExceeded, FieldError, InvalidGraph, InvalidMatroid
from .graphs import WGraph, lagrangian_from_graph
from .smatroid import SymplecticMatroid

TM_CAP = 1 << 24
MAX_INTERLACE_VERTICES = 24


@dataclass(frozen=True)
class ShiftedPolynomial:
    """sum_j coeffs[j] * (x - 1)^j with nonnegative integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if any(x < 0 for x in c):
            raise ValueError("coefficients must be nonnegative")
        object.__setattr__(self, "coeffs", tuple(c) or (0,))

    @classmethod
    def from_exponents(cls, exponents) -> "ShiftedPolynomial":
        counts: dict[int, int] = {}
        for e in exponents:
            counts[e] = counts.get(e, 0) + 1
        top = max(counts, default=0)
        return cls(tuple(counts.get(j, 0) for j in range(top + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def monomial_coeffs(self) -> tuple[int, ...]:
        """Coefficients a_i of x^i."""
        out = [0] * len(self.coeffs)
        for j, c in enumerate(self.coeffs):
            for i in range(j + 1):
                out[i] += c * comb(j, i) * (-1) ** (j - i)
        return tuple(out)

    def __call__(self, x):
        return sum(c * (x - 1) ** j for j, c in enumerate(self.coeffs))

    def __str__(self):
        terms = []
        for i, a in enumerate(self.monomial_coeffs()):
            if a == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(a) == 1:
                coef = "-" if a < 0 else ""
            else:
                coef = str(a)
            terms.append(f"{coef}{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def restricted_tutte_martin(m: SymplecticMatroid, cap: int = TM_CAP) -> ShiftedPolynomial:
    """sum over admissible k-sets S of (x - 1)^(k - rk S), rk S = max_B |S ∩ B|."""
    if not m.masks:
        raise InvalidMatroid("empty bases collection")
    total = smatroid.count_admissible(m.n, m.k)
    if total > cap:
        raise CapExceeded(f"{total} admissible {m.k}-sets exceed the cap {cap}")
    bases = list(m.masks)
    k = m.k
    return ShiftedPolynomial.from_exponents(
        k - max((s & b).bit_count() for b in bases) for s in smatroid.admissible_masks(m.n, k)
    )


def _gf2_corank(rows: list[int], subset: int) -> int:
    words = [rows[v] & subset for v in smatroid.mask_bits(subset)]
    return subset.bit_count() - ffmat._rank_bits(words)


def interlace(g: WGraph) -> ShiftedPolynomial:
    """q_N(G; x) = sum over vertex subsets S of (x - 1)^corank(A[S]) over GF(2)."""
    if g.order > MAX_INTERLACE_VERTICES:
        raise InvalidGraph(f"{g.order} vertices exceed {MAX_INTERLACE_VERTICES}")
    if any(w % 2 == 0 for _, _, w in g.edges):
        raise FieldError("interlace polynomial is defined for GF(2) adjacency (odd weights)")
    rows = [0] * g.order
    for u, v, _ in g.edges:
        rows[u - 1] |= 1 << (v - 1)
        rows[v - 1] |= 1 << (u - 1)
    return ShiftedPolynomial.from_exponents(_gf2_corank(rows, s) for s in range(1 << g.order))


def verify_tm_equals_interlace(g: WGraph) -> bool:
    return restricted_tutte_martin(lagrangian_from_graph(g, 2)) == interlace(g)
