"""Contraction, truncation, Higgs lift and direct sum on bases collections."""

from __future__ import annotations

import logging

from . import smatroid
from .errors import InvalidMatroid, NoBasisContains, NotAMatroid
from .smatroid import JElement, SymplecticMatroid

log = logging.getLogger(__name__)


def contraction(m: SymplecticMatroid, a: JElement | str) -> SymplecticMatroid:
    """{B - a : a ∈ B ∈ bases}; the ground set keeps its size."""
    if isinstance(a, str):
        a = JElement.parse(a)
    bit = 1 << a.bit(m.n)
    masks = frozenset(b ^ bit for b in m.masks if b & bit)
    if not masks:
        raise NoBasisContains(f"no basis contains {a}")
    return SymplecticMatroid(m.n, m.k - 1, masks)


def truncation(m: SymplecticMatroid) -> SymplecticMatroid:
    """All (k-1)-subsets of bases.  Rank 1 input yields the degenerate {∅}."""
    if m.k < 1:
        raise InvalidMatroid("cannot truncate a rank-0 matroid")
    masks = frozenset(b ^ (1 << e) for b in m.masks for e in smatroid.mask_bits(b))
    out = SymplecticMatroid(m.n, m.k - 1, masks)
    if out.is_degenerate:
        log.warning("truncation reached rank 0: degenerate matroid {∅}")
    return out


def higgs_lift(m: SymplecticMatroid, check: bool = True) -> SymplecticMatroid:
    """Admissible (k+1)-sets containing a basis, verified by the maximality oracle.

    The oracle only runs for n <= 7; larger inputs are returned unchecked.
    """
    n = m.n
    if m.k >= n:
        raise InvalidMatroid("a Lagrangian matroid cannot be lifted")
    full = (1 << (2 * n)) - 1
    masks = set()
    for b in m.masks:
        free = full & ~(b | smatroid.star_mask(b, n))
        for e in smatroid.mask_bits(free):
            masks.add(b | (1 << e))
    out = SymplecticMatroid(n, m.k + 1, frozenset(masks))
    if check:
        if n <= smatroid.MAX_ORACLE_N:
            bad = smatroid.find_maximality_violation(out)
            if bad is not None:
                raise NotAMatroid(f"lifted collection fails maximality under ordering {bad}")
        else:
            log.warning("n=%d too large for the maximality oracle; lift left unchecked", n)
    return out


def _shift(mask: int, n_old: int, n_new: int, offset: int) -> int:
    out = 0
    for bit in smatroid.mask_bits(mask):
        idx, starred = bit % n_old, bit >= n_old
        out |= 1 << (idx + offset + (n_new if starred else 0))
    return out


def direct_sum(m1: SymplecticMatroid, m2: SymplecticMatroid) -> SymplecticMatroid:
    """Ground n1 + n2 with m2's indices shifted by n1; bases are all unions."""
    n = m1.n + m2.n
    left = [_shift(b, m1.n, n, 0) for b in m1.masks] if m1.n else [0]
    right = [_shift(b, m2.n, n, m1.n) for b in m2.masks] if m2.n else [0]
    return SymplecticMatroid(n, m1.k + m2.k, frozenset(a | b for a in left for b in right))


def empty_matroid() -> SymplecticMatroid:
    """The matroid on the empty ground set; identity for direct_sum."""
    return SymplecticMatroid(0, 0, frozenset({0}))
