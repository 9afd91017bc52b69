"""Symplectic vectors, isotropic subspaces and stabilizer matrices.

A vector over GF(p)^{2n} is written ``(a|b)``; the first ``n`` columns of a
stabilizer matrix hold the X part ``a`` and the last ``n`` the Z part ``b``.
Phases are not tracked.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence

from . import ffmat
from .errors import (
    CapExceeded,
    DependentRows,
    FormatError,
    NotIsotropic,
    ShapeMismatch,
    TooManyRows,
    XZtNonzero,
    ZeroTorusEntry,
)
from .ffmat import DEFAULT_CAP, FieldSpec, FMatrix


@dataclass(frozen=True)
class SymplecticVector:
    field: FieldSpec
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ShapeMismatch("X and Z parts must have the same length")
        p = self.field.p
        object.__setattr__(self, "a", tuple(int(x) % p for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) % p for x in self.b))

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def from_flat(cls, v: Sequence[int], field: FieldSpec):
        if len(v) % 2:
            raise ShapeMismatch("flat symplectic vector needs even length")
        n = len(v) // 2
        return cls(field, tuple(v[:n]), tuple(v[n:]))

    def flat(self) -> tuple[int, ...]:
        return self.a + self.b

    def weight(self) -> int:
        return symplectic_weight(self.flat())


def symplectic_weight(v: Sequence[int]) -> int:
    """Number of positions i with (a_i, b_i) != (0, 0)."""
    n = len(v) // 2
    return sum(1 for i in range(n) if v[i] or v[n + i])


def symplectic_inner(u: SymplecticVector, v: SymplecticVector) -> int:
    """<(a|b), (c|d)> = a.d - c.b mod p."""
    if u.field != v.field or u.n != v.n:
        raise ShapeMismatch("vectors must share field and length")
    p = u.field.p
    return (sum(x * y for x, y in zip(u.a, v.b)) - sum(x * y for x, y in zip(v.a, u.b))) % p


def _inner_flat(u, v, n, p):
    s = 0
    for i in range(n):
        s += u[i] * v[n + i] - v[i] * u[n + i]
    return s % p


def is_isotropic(m: FMatrix) -> bool:
    if m.cols % 2:
        raise ShapeMismatch(f"symplectic matrices need an even column count, got {m.cols}")
    n, p = m.cols // 2, m.field.p
    rows = [m.row(i) for i in range(m.rows)]
    return all(
        _inner_flat(rows[i], rows[j], n, p) == 0
        for i in range(len(rows))
        for j in range(i + 1, len(rows))
    )


def symplectic_complement(m: FMatrix) -> FMatrix:
    """Basis of {u : <u, v> = 0 for every row v of m}."""
    n = m.cols // 2
    p = m.field.p
    # <u, (c|d)> = u . (d | -c)
    twisted = [list(r[n:]) + [(-x) % p for x in r[:n]] for r in m.tolist()]
    if not twisted:
        return FMatrix.identity(m.cols, m.field)
    return ffmat.nullspace(FMatrix.from_rows(twisted, m.field, m.cols))


@dataclass(frozen=True)
class StabilizerMatrix:
    """Independent, pairwise-orthogonal generators of an [[n, k]] stabilizer code."""

    gens: FMatrix

    @property
    def field(self) -> FieldSpec:
        return self.gens.field

    @property
    def n(self) -> int:
        return self.gens.cols // 2

    @property
    def k(self) -> int:
        return self.n - self.gens.rows

    @property
    def x_block(self) -> FMatrix:
        return self.gens.select_columns(range(self.n))

    @property
    def z_block(self) -> FMatrix:
        return self.gens.select_columns(range(self.n, 2 * self.n))

    def generators(self) -> list[SymplecticVector]:
        return [SymplecticVector.from_flat(self.gens.row(i), self.field) for i in range(self.gens.rows)]


def make_stabilizer(m: FMatrix) -> StabilizerMatrix:
    if m.cols % 2:
        raise ShapeMismatch(f"stabilizer matrix needs 2n columns, got {m.cols}")
    n = m.cols // 2
    if m.rows > n:
        raise TooManyRows(
            f"{m.rows} rows exceed n={n}: an isotropic subspace of GF(p)^{2 * n} has dimension at most {n}"
        )
    if ffmat.rank(m) != m.rows:
        raise DependentRows("generator rows are linearly dependent")
    if not is_isotropic(m):
        raise NotIsotropic("some pair of rows has nonzero symplectic inner product")
    return StabilizerMatrix(m)


def build_css(x_block: FMatrix, z_block: FMatrix) -> StabilizerMatrix:
    """Stabilizer with generator matrix [X 0; 0 Z]."""
    if x_block.field != z_block.field:
        raise ShapeMismatch("X and Z blocks must share a field")
    if x_block.cols != z_block.cols:
        raise ShapeMismatch("X and Z blocks need the same column count")
    n, p = x_block.cols, x_block.field.p
    if x_block.rows and z_block.rows:
        if any(x_block.matmul(z_block.transpose()).entries):
            raise XZtNonzero("X Z^t is not zero")
    rows = [list(r) + [0] * n for r in x_block.tolist()]
    rows += [[0] * n + list(r) for r in z_block.tolist()]
    return make_stabilizer(FMatrix.from_rows(rows, p, 2 * n))


def is_homogeneous_form(s: StabilizerMatrix) -> bool:
    """Row space splits as (X-only part) + (Z-only part).

    dim(V ∩ {b=0}) = dim V - rank(B) and likewise for A, so the split holds
    iff rank(A) + rank(B) == dim V.
    """
    return ffmat.rank(s.x_block) + ffmat.rank(s.z_block) == s.gens.rows


def torus_action(s: StabilizerMatrix, t: Sequence[int]) -> StabilizerMatrix:
    """Return [A T^-1 | B T] for the diagonal matrix T = diag(t)."""
    f = s.field
    if len(t) != s.n:
        raise ShapeMismatch(f"torus vector needs {s.n} entries")
    t = [x % f.p for x in t]
    if any(x == 0 for x in t):
        raise ZeroTorusEntry("torus entries must be nonzero")
    tinv = [f.inv(x) for x in t]
    n = s.n
    rows = [
        [r[i] * tinv[i] for i in range(n)] + [r[n + i] * t[i] for i in range(n)]
        for r in s.gens.tolist()
    ]
    return StabilizerMatrix(FMatrix.from_rows(rows, f, 2 * n))


def code_distance(s: StabilizerMatrix, cap: int = DEFAULT_CAP) -> int:
    """Minimum symplectic weight by exhaustive enumeration.

    For k = 0 this is the minimum over nonzero stabilizer elements; for k > 0
    over the symplectic complement minus the stabilizer itself.  Returns 0
    only for the degenerate empty code (n = 0).
    """
    p = s.field.p
    if p ** (s.n + s.k) > cap:
        raise CapExceeded(f"{p}^{s.n + s.k} vectors exceed the enumeration cap {cap}")
    best = None
    if s.k == 0:
        for v in ffmat.enumerate_row_space(s.gens, cap):
            w = symplectic_weight(v)
            if w and (best is None or w < best):
                best = w
    else:
        stab = set(ffmat.enumerate_row_space(s.gens, cap))
        for v in ffmat.enumerate_row_space(symplectic_complement(s.gens), cap):
            if v in stab:
                continue
            w = symplectic_weight(v)
            if best is None or w < best:
                best = w
    return best or 0


@dataclass(frozen=True)
class PauliString:
    """Phase-free generalized Pauli operator X(a_1)Z(b_1) ⊗ ... ⊗ X(a_n)Z(b_n)."""

    field: FieldSpec
    pairs: tuple[tuple[int, int], ...]

    def __str__(self):
        binary = self.field.p == 2
        parts = []
        for i, (a, b) in enumerate(self.pairs, start=1):
            if not (a or b):
                continue
            if binary:
                parts.append(("X%d" % i if a else "") + ("Z%d" % i if b else ""))
            else:
                body = (f"X({a})" if a else "") + (f"Z({b})" if b else "")
                parts.append(f"{body}_{i}")
        return " ".join(parts) if parts else "I"

    def to_vector(self) -> SymplecticVector:
        return SymplecticVector(self.field, tuple(a for a, _ in self.pairs), tuple(b for _, b in self.pairs))


def format_pauli(v: SymplecticVector) -> PauliString:
    return PauliString(v.field, tuple(zip(v.a, v.b)))


_BIN_FACTOR = re.compile(r"^(?:X(\d+))?(?:Z(\d+))?$")
_QARY_FACTOR = re.compile(r"^(?:X\((\d+)\))?(?:Z\((\d+)\))?_(\d+)$")


def parse_pauli(text: str, n: int, field: FieldSpec) -> PauliString:
    """Inverse of ``str(PauliString)``."""
    a, b = [0] * n, [0] * n
    text = text.strip()
    if text != "I":
        for tok in text.split():
            if field.p == 2:
                mt = _BIN_FACTOR.match(tok)
                if not mt or not (mt.group(1) or mt.group(2)):
                    raise FormatError(f"bad Pauli factor {tok!r}")
                if mt.group(1) and mt.group(2) and mt.group(1) != mt.group(2):
                    raise FormatError(f"mismatched positions in {tok!r}")
                pos = int(mt.group(1) or mt.group(2)) - 1
                xa, zb = int(bool(mt.group(1))), int(bool(mt.group(2)))
            else:
                mt = _QARY_FACTOR.match(tok)
                if not mt or not (mt.group(1) or mt.group(2)):
                    raise FormatError(f"bad Pauli factor {tok!r}")
                pos = int(mt.group(3)) - 1
                xa, zb = int(mt.group(1) or 0), int(mt.group(2) or 0)
            if not 0 <= pos < n:
                raise FormatError(f"position out of range in {tok!r}")
            a[pos], b[pos] = xa % field.p, zb % field.p
    return PauliString(field, tuple(zip(a, b)))


def random_isotropic(n: int, rows: int, field: FieldSpec | int, rng: random.Random) -> FMatrix:
    """Random ``rows`` x 2n matrix with independent, pairwise-orthogonal rows."""
    if isinstance(field, int):
        field = FieldSpec(field)
    if rows > n:
        raise TooManyRows(f"{rows} > n={n}")
    p = field.p
    chosen: list[list[int]] = []
    while len(chosen) < rows:
        current = FMatrix.from_rows(chosen, field, 2 * n)
        comp = symplectic_complement(current)
        # random combination of the complement, rejected if already in the span
        while True:
            coeffs = [rng.randrange(p) for _ in range(comp.rows)]
            v = [sum(c * comp[i, j] for i, c in enumerate(coeffs)) % p for j in range(2 * n)]
            if any(v) and (not chosen or not ffmat.in_row_space(current, v)):
                break
        chosen.append(v)
    return FMatrix.from_rows(chosen, field, 2 * n)
