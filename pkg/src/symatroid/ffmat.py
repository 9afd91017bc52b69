"""Exact dense linear algebra over prime fields GF(p).

Matrices are immutable.  Over GF(2) each row is also kept as a Python
integer bitmask (bit ``j`` is column ``j``) so that rank and minor tests,
which sit on the hot path of basis enumeration, reduce to XORs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import CapExceeded, FieldError, IndexOutOfRange, ShapeMismatch

DEFAULT_CAP = 1 << 22


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p), 2 <= p < 2**16."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p < 1 << 16:
            raise FieldError(f"field modulus must be an integer in [2, 65536), got {self.p!r}")
        if not _is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(x, self.p - 2, self.p)

    def __str__(self):
        return f"GF({self.p})"


GF2 = FieldSpec(2)


@dataclass(frozen=True)
class FMatrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or self.rows * self.cols != len(self.entries):
            raise ShapeMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        p = self.field.p
        if any(not 0 <= x < p for x in self.entries):
            raise FieldError(f"entries must be residues in [0, {p})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], field: FieldSpec | int, cols: int | None = None):
        """Build from nested rows, reducing every entry mod p."""
        if isinstance(field, int):
            field = FieldSpec(field)
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeMismatch("ragged rows")
        p = field.p
        return cls(field, len(rows), cols, tuple(int(x) % p for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec | int):
        return cls.from_rows([[0] * cols for _ in range(rows)], field, cols)

    @classmethod
    def identity(cls, n: int, field: FieldSpec | int):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], field, n)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    @cached_property
    def bitrows(self) -> tuple[int, ...]:
        """GF(2) rows packed into integers (bit j = column j)."""
        if self.field.p != 2:
            raise FieldError("bit packing is only defined over GF(2)")
        out = []
        for i in range(self.rows):
            word = 0
            for j, x in enumerate(self.row(i)):
                if x:
                    word |= 1 << j
            out.append(word)
        return tuple(out)

    def select_columns(self, cols: Sequence[int]) -> "FMatrix":
        rows = [[self.row(i)[j] for j in cols] for i in range(self.rows)]
        return FMatrix.from_rows(rows, self.field, len(cols))

    def select_rows(self, idx: Sequence[int]) -> "FMatrix":
        return FMatrix.from_rows([self.row(i) for i in idx], self.field, self.cols)

    def transpose(self) -> "FMatrix":
        return FMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.field, self.rows
        )

    def hstack(self, other: "FMatrix") -> "FMatrix":
        _same_field(self, other)
        if self.rows != other.rows:
            raise ShapeMismatch("hstack needs equal row counts")
        return FMatrix.from_rows(
            [self.row(i) + other.row(i) for i in range(self.rows)], self.field, self.cols + other.cols
        )

    def vstack(self, other: "FMatrix") -> "FMatrix":
        _same_field(self, other)
        if self.cols != other.cols:
            raise ShapeMismatch("vstack needs equal column counts")
        return FMatrix.from_rows(self.tolist() + other.tolist(), self.field, self.cols)

    def matmul(self, other: "FMatrix") -> "FMatrix":
        _same_field(self, other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        p = self.field.p
        out = [
            [sum(self[i, t] * other[t, j] for t in range(self.cols)) % p for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return FMatrix.from_rows(out, self.field, other.cols)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


def _same_field(a: FMatrix, b: FMatrix):
    if a.field != b.field:
        raise FieldError(f"field mismatch: {a.field} vs {b.field}")


def _rank_bits(words) -> int:
    basis: dict[int, int] = {}
    for w in words:
        while w:
            top = w.bit_length() - 1
            if top not in basis:
                basis[top] = w
                break
            w ^= basis[top]
    return len(basis)


def rref(m: FMatrix) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form: returns (nonzero rows, pivot columns)."""
    p = m.field.p
    a = m.tolist()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: FMatrix) -> int:
    if m.field.p == 2:
        return _rank_bits(m.bitrows)
    return len(rref(m)[1])


def submatrix_det_nonzero(m: FMatrix, col_indices: Sequence[int]) -> bool:
    """True iff the square submatrix on ``col_indices`` is invertible."""
    cols = list(col_indices)
    if len(cols) != m.rows:
        raise ShapeMismatch(f"need exactly {m.rows} columns, got {len(cols)}")
    if len(set(cols)) != len(cols):
        raise IndexOutOfRange(f"repeated column in {cols}")
    if any(not 0 <= c < m.cols for c in cols):
        raise IndexOutOfRange(f"column index out of range in {cols}")
    if m.field.p == 2:
        words = []
        for w in m.bitrows:
            packed = 0
            for t, c in enumerate(cols):
                if w >> c & 1:
                    packed |= 1 << t
            words.append(packed)
        return _rank_bits(words) == m.rows
    return rank(m.select_columns(cols)) == m.rows


def row_space_equal(a: FMatrix, b: FMatrix) -> bool:
    _same_field(a, b)
    if a.cols != b.cols:
        raise ShapeMismatch(f"column counts differ: {a.cols} vs {b.cols}")
    return rref(a)[0] == rref(b)[0]


def row_basis(m: FMatrix) -> FMatrix:
    """Independent rows spanning the row space (reduced echelon form)."""
    rows, _ = rref(m)
    return FMatrix.from_rows(rows, m.field, m.cols)


def nullspace(m: FMatrix) -> FMatrix:
    """Basis (as rows) of the right kernel {x : m x = 0}."""
    p = m.field.p
    rows, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * m.cols
        v[f] = 1
        for r, pc in zip(rows, pivots):
            v[pc] = (-r[f]) % p
        basis.append(v)
    return FMatrix.from_rows(basis, m.field, m.cols)


def in_row_space(m: FMatrix, v: Sequence[int]) -> bool:
    ext = FMatrix.from_rows(m.tolist() + [list(v)], m.field, m.cols)
    return rank(ext) == rank(m)


def enumerate_row_space(m: FMatrix, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every vector of the row space once, zero vector first."""
    p = m.field.p
    basis, _ = rref(m)
    size = p ** len(basis)
    if size > cap:
        raise CapExceeded(f"row space has {size} vectors, cap is {cap}")
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        v = [0] * m.cols
        for c, r in zip(coeffs, basis):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, r)]
        yield tuple(v)
