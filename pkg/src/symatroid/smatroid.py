"""Symplectic matroids on J = [n] ∪ [n]*.

Internally an admissible set is an integer bitmask over 2n bits: bit
``i - 1`` is the element ``i`` and bit ``n + i - 1`` is ``i*``.  This is also
the column index of that element in a ``[A|B]`` representation, which keeps
basis enumeration a direct column selection.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from . import ffmat
from .errors import (
    FormatError,
    IndexOutOfRange,
    InvalidMatroid,
    NotAdmissible,
    NotLagrangian,
    OracleTooLarge,
)
from .ffmat import FMatrix

MAX_ORACLE_N = 7
MAX_EXCHANGE_CHECK_N = 12


class JElement(NamedTuple):
    index: int
    starred: bool = False

    def __str__(self):
        return f"{self.index}*" if self.starred else str(self.index)

    def star(self) -> "JElement":
        return JElement(self.index, not self.starred)

    def bit(self, n: int) -> int:
        if not 1 <= self.index <= n:
            raise IndexOutOfRange(f"element {self} outside ground set of size {n}")
        return self.index - 1 + (n if self.starred else 0)

    @classmethod
    def from_bit(cls, bit: int, n: int) -> "JElement":
        return cls(bit % n + 1, bit >= n)

    @classmethod
    def parse(cls, token: str) -> "JElement":
        m = re.fullmatch(r"\s*(\d+)\s*(\*?)\s*", token)
        if not m or int(m.group(1)) < 1:
            raise FormatError(f"bad element {token!r}")
        return cls(int(m.group(1)), bool(m.group(2)))


def _low_mask(n: int) -> int:
    return (1 << n) - 1


def mask_is_admissible(mask: int, n: int) -> bool:
    low = _low_mask(n)
    return mask >> (2 * n) == 0 and (mask & low) & (mask >> n) == 0


def star_mask(mask: int, n: int) -> int:
    low = _low_mask(n)
    return ((mask & low) << n) | (mask >> n)


def mask_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_key(mask: int, n: int) -> tuple:
    """Canonical sort key: elements ordered 1 < 1* < 2 < 2* < ..."""
    return tuple(sorted((b % n + 1, b >= n) for b in mask_bits(mask)))


@dataclass(frozen=True)
class AdmissibleSet:
    n: int
    mask: int

    def __post_init__(self):
        if not mask_is_admissible(self.mask, self.n):
            raise NotAdmissible(f"mask {self.mask:#x} is not an admissible subset of J for n={self.n}")

    @classmethod
    def of(cls, elements: Iterable, n: int) -> "AdmissibleSet":
        """Build from JElements, (index, starred) pairs, ints or strings like ``"2*"``."""
        mask = 0
        for e in elements:
            if isinstance(e, str):
                e = JElement.parse(e)
            elif isinstance(e, int):
                e = JElement(e)
            else:
                e = JElement(*e)
            b = 1 << e.bit(n)
            if mask & b:
                raise NotAdmissible(f"element {e} repeated")
            mask |= b
        if not mask_is_admissible(mask, n):
            raise NotAdmissible("set contains some i together with i*")
        return cls(n, mask)

    @classmethod
    def parse(cls, text: str, n: int) -> "AdmissibleSet":
        tokens = text.replace("{", " ").replace("}", " ").replace(",", " ").split()
        return cls.of(tokens, n)

    def elements(self) -> list[JElement]:
        return sorted(JElement.from_bit(b, self.n) for b in mask_bits(self.mask))

    def __iter__(self) -> Iterator[JElement]:
        return iter(self.elements())

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, e) -> bool:
        if isinstance(e, str):
            e = JElement.parse(e)
        return bool(self.mask >> JElement(*e).bit(self.n) & 1)

    def star(self) -> "AdmissibleSet":
        return AdmissibleSet(self.n, star_mask(self.mask, self.n))

    def key(self) -> tuple:
        return mask_key(self.mask, self.n)

    def __lt__(self, other: "AdmissibleSet"):
        return self.key() < other.key()

    def __str__(self):
        return "{" + ", ".join(str(e) for e in self.elements()) + "}"

    def __repr__(self):
        return f"AdmissibleSet({self})"


def star(s: AdmissibleSet) -> AdmissibleSet:
    return s.star()


def sort_masks(masks: Iterable[int], n: int) -> list[int]:
    return sorted(masks, key=lambda m: mask_key(m, n))


def admissible_masks(n: int, k: int) -> Iterator[int]:
    """All admissible k-subsets of J: C(n, k) supports times 2^k signings."""
    for support in itertools.combinations(range(n), k):
        for signs in itertools.product((0, n), repeat=k):
            mask = 0
            for i, s in zip(support, signs):
                mask |= 1 << (i + s)
            yield mask


def count_admissible(n: int, k: int) -> int:
    return comb(n, k) * 2**k


# ---------------------------------------------------------------------------
# admissible orderings


@dataclass(frozen=True)
class AdmissibleOrdering:
    """Signed permutation (i_1, ..., i_n) giving i_1 > ... > i_n > i_n* > ... > i_1*."""

    elements: tuple[JElement, ...]

    def __post_init__(self):
        idx = sorted(e.index for e in self.elements)
        if idx != list(range(1, len(self.elements) + 1)):
            raise InvalidMatroid("ordering indices must form a permutation of [n]")

    @property
    def n(self) -> int:
        return len(self.elements)

    @classmethod
    def standard(cls, n: int) -> "AdmissibleOrdering":
        """n > n-1 > ... > 1 > 1* > ... > n*."""
        return cls(tuple(JElement(i) for i in range(n, 0, -1)))

    def ascending(self) -> list[JElement]:
        return [e.star() for e in self.elements] + list(reversed(self.elements))

    def positions(self) -> dict[JElement, int]:
        return {e: i for i, e in enumerate(self.ascending())}

    def __str__(self):
        return " > ".join(str(e) for e in reversed(self.ascending()))


def all_orderings(n: int) -> Iterator[AdmissibleOrdering]:
    """All 2^n n! admissible orderings."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((False, True), repeat=n):
            yield AdmissibleOrdering(tuple(JElement(i, s) for i, s in zip(perm, signs)))


class Comparison(enum.Enum):
    A_LE_B = "A<=B"
    B_LE_A = "B<=A"
    BOTH = "both"
    INCOMPARABLE = "incomparable"


def compare_under(a: AdmissibleSet, b: AdmissibleSet, w: AdmissibleOrdering) -> Comparison:
    """Gale comparison of equal-size sets under the ordering ``w``."""
    if len(a) != len(b):
        raise InvalidMatroid("compared sets must have equal size")
    pos = w.positions()
    pa = sorted(pos[e] for e in a.elements())
    pb = sorted(pos[e] for e in b.elements())
    a_le = all(x <= y for x, y in zip(pa, pb))
    b_le = all(y <= x for x, y in zip(pa, pb))
    if a_le and b_le:
        return Comparison.BOTH
    if a_le:
        return Comparison.A_LE_B
    if b_le:
        return Comparison.B_LE_A
    return Comparison.INCOMPARABLE


# ---------------------------------------------------------------------------
# matroids


@dataclass(frozen=True)
class SymplecticMatroid:
    """Ground size ``n``, rank ``k`` and bases as admissible bitmasks.

    Construction checks the structural invariants only; the Maximality
    condition is verified separately by :func:`check_maximality`.
    """

    n: int
    k: int
    masks: frozenset[int]

    def __post_init__(self):
        if not self.masks:
            raise InvalidMatroid("a symplectic matroid needs at least one basis")
        for m in self.masks:
            if not mask_is_admissible(m, self.n):
                raise NotAdmissible(f"basis {m:#x} is not admissible for n={self.n}")
            if m.bit_count() != self.k:
                raise InvalidMatroid(f"bases must all have size {self.k}")

    @classmethod
    def from_bases(cls, n: int, bases: Iterable) -> "SymplecticMatroid":
        masks = set()
        for b in bases:
            if isinstance(b, AdmissibleSet):
                if b.n != n:
                    raise InvalidMatroid("basis ground size mismatch")
                masks.add(b.mask)
            elif isinstance(b, int):
                masks.add(b)
            elif isinstance(b, str):
                masks.add(AdmissibleSet.parse(b, n).mask)
            else:
                masks.add(AdmissibleSet.of(b, n).mask)
        if not masks:
            raise InvalidMatroid("a symplectic matroid needs at least one basis")
        sizes = {m.bit_count() for m in masks}
        if len(sizes) != 1:
            raise InvalidMatroid(f"bases have differing sizes {sorted(sizes)}")
        return cls(n, sizes.pop(), frozenset(masks))

    @property
    def bases(self) -> list[AdmissibleSet]:
        return [AdmissibleSet(self.n, m) for m in sort_masks(self.masks, self.n)]

    @property
    def is_degenerate(self) -> bool:
        return self.k == 0

    @cached_property
    def independent_masks(self) -> frozenset[int]:
        """Every subset of every basis."""
        seen = set(self.masks)
        level = set(self.masks)
        while level:
            nxt = set()
            for m in level:
                rest = m
                while rest:
                    low = rest & -rest
                    rest ^= low
                    sub = m ^ low
                    if sub not in seen:
                        nxt.add(sub)
            seen |= nxt
            level = nxt
        return frozenset(seen)

    @cached_property
    def circuit_masks(self) -> frozenset[int]:
        indep = self.independent_masks
        n = self.n
        full = (1 << (2 * n)) - 1
        candidates = set()
        for m in indep:
            blocked = m | star_mask(m, n)
            free = full & ~blocked
            while free:
                low = free & -free
                free ^= low
                c = m | low
                if c not in indep:
                    candidates.add(c)
        return frozenset(
            c for c in candidates
            if all((c ^ (1 << b)) in indep for b in mask_bits(c))
        )

    def __str__(self):
        return f"SymplecticMatroid(n={self.n}, k={self.k}, {len(self.masks)} bases)"


def _as_mask(m: SymplecticMatroid, s) -> int:
    if isinstance(s, AdmissibleSet):
        if s.n != m.n:
            raise InvalidMatroid("set and matroid ground sizes differ")
        return s.mask
    if isinstance(s, str):
        return AdmissibleSet.parse(s, m.n).mask
    return AdmissibleSet.of(s, m.n).mask


@lru_cache(maxsize=None)
def _ordering_positions(n: int) -> np.ndarray:
    """Array (2^n n!, 2n): ascending position of each element bit per ordering."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    signs = np.array(list(itertools.product((0, 1), repeat=n)), dtype=np.int64).reshape(-1, n)
    p = np.repeat(perms, len(signs), axis=0)
    s = np.tile(signs, (len(perms), 1))
    pos = np.empty((len(p), 2 * n), dtype=np.int8)
    rows = np.arange(len(p))[:, None]
    t = np.arange(n)
    pos[rows, p + n * s] = 2 * n - 1 - t
    pos[rows, p + n * (1 - s)] = t
    pos.flags.writeable = False
    return pos


def _ordering_from_row(pos_row: np.ndarray, n: int) -> AdmissibleOrdering:
    elems = []
    for t in range(n):
        bit = int(np.where(pos_row == 2 * n - 1 - t)[0][0])
        elems.append(JElement.from_bit(bit, n))
    return AdmissibleOrdering(tuple(elems))


def find_maximality_violation(m: SymplecticMatroid) -> AdmissibleOrdering | None:
    """First admissible ordering with no Gale-maximum basis, or None."""
    n = m.n
    if n > MAX_ORACLE_N:
        raise OracleTooLarge(f"maximality oracle enumerates 2^n n! orderings; n={n} > {MAX_ORACLE_N}")
    if m.k == 0 or len(m.masks) == 1:
        return None
    idx = np.array([mask_bits(b) for b in sort_masks(m.masks, n)], dtype=np.int64)
    pos = _ordering_positions(n)
    chunk = max(1, (1 << 22) // (idx.size or 1))
    for start in range(0, len(pos), chunk):
        block = pos[start:start + chunk]
        ranks = np.sort(block[:, idx], axis=2)
        top = ranks.max(axis=1)
        ok = (ranks == top[:, None, :]).all(axis=2).any(axis=1)
        if not ok.all():
            bad = int(np.argmin(ok))
            return _ordering_from_row(block[bad], n)
    return None


def check_maximality(m: SymplecticMatroid) -> bool:
    return find_maximality_violation(m) is None


def bases_from_representation(m: FMatrix) -> SymplecticMatroid:
    """Admissible k-sets whose k x k column minor of ``m`` is nonzero."""
    from .sympl import make_stabilizer

    make_stabilizer(m)
    n, k = m.cols // 2, m.rows
    masks = []
    if m.field.p == 2:
        colwords = []
        for j in range(m.cols):
            w = 0
            for i in range(m.rows):
                if m[i, j]:
                    w |= 1 << i
            colwords.append(w)
        for mask in admissible_masks(n, k):
            if ffmat._rank_bits(colwords[b] for b in mask_bits(mask)) == k:
                masks.append(mask)
    else:
        for mask in admissible_masks(n, k):
            if ffmat.submatrix_det_nonzero(m, mask_bits(mask)):
                masks.append(mask)
    if not masks:
        raise InvalidMatroid("representation has no admissible basis")
    return SymplecticMatroid(n, k, frozenset(masks))


def rank_of_set(m: SymplecticMatroid, s) -> int:
    """max over bases B of |s ∩ B|."""
    mask = _as_mask(m, s)
    return max((mask & b).bit_count() for b in m.masks)


def is_independent(m: SymplecticMatroid, s) -> bool:
    mask = _as_mask(m, s)
    return any(mask & ~b == 0 for b in m.masks)


def circuits(m: SymplecticMatroid) -> list[AdmissibleSet]:
    """Minimal admissible sets contained in no basis, canonically sorted."""
    return [AdmissibleSet(m.n, c) for c in sort_masks(m.circuit_masks, m.n)]


def is_homogeneous(m: SymplecticMatroid) -> bool:
    low = _low_mask(m.n)
    return len({(b & low).bit_count() for b in m.masks}) == 1


def is_lagrangian(m: SymplecticMatroid) -> bool:
    return m.k == m.n


def _require_lagrangian(m: SymplecticMatroid):
    if not is_lagrangian(m):
        raise NotLagrangian(f"rank {m.k} != n = {m.n}")


def lagrangian_dual(m: SymplecticMatroid) -> SymplecticMatroid:
    _require_lagrangian(m)
    return SymplecticMatroid(m.n, m.k, frozenset(star_mask(b, m.n) for b in m.masks))


def is_self_dual(m: SymplecticMatroid) -> bool:
    return lagrangian_dual(m).masks == m.masks


def cocircuits(m: SymplecticMatroid) -> list[AdmissibleSet]:
    _require_lagrangian(m)
    return [AdmissibleSet(m.n, c) for c in sort_masks({star_mask(c, m.n) for c in m.circuit_masks}, m.n)]


def circuit_elimination_check(m: SymplecticMatroid) -> bool:
    """For circuits C1 != C2 sharing e with admissible union, (C1 ∪ C2) - e is dependent."""
    n = m.n
    indep = m.independent_masks
    circ = sorted(m.circuit_masks)
    for c1, c2 in itertools.combinations(circ, 2):
        shared = c1 & c2
        union = c1 | c2
        if not shared or not mask_is_admissible(union, n):
            continue
        for e in mask_bits(shared):
            # an admissible set is dependent iff it contains a circuit
            if union ^ (1 << e) in indep:
                return False
    return True


def relabel_without(m: SymplecticMatroid, index: int) -> SymplecticMatroid:
    """Drop the pair {index, index*} from the ground set (no basis may use it)."""
    n = m.n
    if not 1 <= index <= n:
        raise IndexOutOfRange(f"index {index} outside [1, {n}]")
    i = index - 1
    out = set()
    for b in m.masks:
        if b >> i & 1 or b >> (n + i) & 1:
            raise InvalidMatroid(f"element {index} or {index}* is used by a basis")
        new = 0
        for bit in mask_bits(b):
            j, starred = bit % n, bit >= n
            j -= j > i
            new |= 1 << (j + (n - 1 if starred else 0))
        out.add(new)
    return SymplecticMatroid(n - 1, m.k, frozenset(out))


# ---------------------------------------------------------------------------
# ordinary matroids on [n]


@dataclass(frozen=True)
class OrdinaryMatroid:
    """Matroid on [n] with bases as bitmasks (bit i - 1 is element i)."""

    n: int
    masks: frozenset[int]

    def __post_init__(self):
        if not self.masks:
            raise InvalidMatroid("a matroid needs at least one basis")
        if any(b >> self.n for b in self.masks):
            raise IndexOutOfRange(f"basis element outside [1, {self.n}]")
        if len({b.bit_count() for b in self.masks}) != 1:
            raise InvalidMatroid("bases have differing sizes")
        if self.n <= MAX_EXCHANGE_CHECK_N and not self._exchange_holds():
            raise InvalidMatroid("bases violate the exchange axiom")

    def _exchange_holds(self) -> bool:
        bases = self.masks
        for b1 in bases:
            for b2 in bases:
                for x in mask_bits(b1 & ~b2):
                    if not any((b1 ^ (1 << x)) | (1 << y) in bases for y in mask_bits(b2 & ~b1)):
                        return False
        return True

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[Iterable[int]]) -> "OrdinaryMatroid":
        masks = set()
        for b in bases:
            mask = 0
            for i in b:
                if not 1 <= i <= n:
                    raise IndexOutOfRange(f"element {i} outside [1, {n}]")
                mask |= 1 << (i - 1)
            masks.add(mask)
        return cls(n, frozenset(masks))

    @classmethod
    def uniform(cls, r: int, n: int) -> "OrdinaryMatroid":
        return cls.from_bases(n, itertools.combinations(range(1, n + 1), r))

    @property
    def rank(self) -> int:
        return next(iter(self.masks)).bit_count()

    @property
    def bases(self) -> list[frozenset[int]]:
        return [frozenset(b + 1 for b in mask_bits(m)) for m in sorted(self.masks, key=lambda m: sorted(mask_bits(m)))]

    def dual(self) -> "OrdinaryMatroid":
        full = (1 << self.n) - 1
        return OrdinaryMatroid(self.n, frozenset(full & ~b for b in self.masks))

    def is_identically_self_dual(self) -> bool:
        return self.dual().masks == self.masks

    @cached_property
    def circuit_masks(self) -> frozenset[int]:
        indep = set(self.masks)
        level = set(self.masks)
        while level:
            level = {m ^ (1 << b) for m in level for b in mask_bits(m)} - indep
            indep |= level
        full = (1 << self.n) - 1
        cands = set()
        for m in indep:
            for b in mask_bits(full & ~m):
                c = m | (1 << b)
                if c not in indep:
                    cands.add(c)
        return frozenset(c for c in cands if all(c ^ (1 << b) in indep for b in mask_bits(c)))

    def circuits(self) -> list[frozenset[int]]:
        return [
            frozenset(b + 1 for b in mask_bits(c))
            for c in sorted(self.circuit_masks, key=lambda m: sorted(mask_bits(m)))
        ]
