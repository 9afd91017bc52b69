"""Plain-text formats for matrices, stabilizers, matroids and graphs.

Matrix::

    stabilizer n=3        # optional header
    field 2
    matrix 3 6
    1 0 0 0 1 1
    ...

Matroid::

    ground 3
    basis 1 2 3
    basis 1* 2* 3

Graph::

    graph 3
    edge 1 2 weight=1 label=1
    edge 2 3 label=2*

``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .errors import FormatError, SymatroidError
from .ffmat import FieldSpec, FMatrix
from .graphs import EdgeLabeling, WGraph
from .smatroid import AdmissibleSet, JElement, OrdinaryMatroid, SymplecticMatroid


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", lineno) from None


def detect_kind(text: str) -> str:
    """'matrix', 'matroid' or 'graph' from the first keyword."""
    for lineno, toks in _lines(text):
        kw = toks[0]
        if kw in ("field", "stabilizer"):
            return "matrix"
        if kw == "ground":
            return "matroid"
        if kw == "graph":
            return "graph"
        raise FormatError(f"unknown leading keyword {kw!r}", lineno)
    raise FormatError("empty input")


@dataclass(frozen=True)
class MatrixFile:
    matrix: FMatrix
    stabilizer_n: int | None = None


def parse_matrix(text: str, field_override: int | None = None) -> MatrixFile:
    lines = list(_lines(text))
    pos = 0
    stab_n = None
    if pos < len(lines) and lines[pos][1][0] == "stabilizer":
        lineno, toks = lines[pos]
        m = re.fullmatch(r"n=(\d+)", toks[1]) if len(toks) == 2 else None
        if not m:
            raise FormatError("expected 'stabilizer n=<n>'", lineno)
        stab_n = int(m.group(1))
        pos += 1
    if pos >= len(lines) or lines[pos][1][0] != "field" or len(lines[pos][1]) != 2:
        raise FormatError("expected 'field <p>'", lines[pos][0] if pos < len(lines) else None)
    lineno, toks = lines[pos]
    try:
        field = FieldSpec(field_override or _int(toks[1], lineno))
    except SymatroidError as exc:
        raise FormatError(str(exc), lineno) from None
    pos += 1
    if pos >= len(lines) or lines[pos][1][0] != "matrix" or len(lines[pos][1]) != 3:
        raise FormatError("expected 'matrix <rows> <cols>'", lines[pos][0] if pos < len(lines) else None)
    lineno, toks = lines[pos]
    nrows, ncols = _int(toks[1], lineno), _int(toks[2], lineno)
    pos += 1
    body = lines[pos:]
    if len(body) != nrows:
        raise FormatError(f"expected {nrows} matrix rows, found {len(body)}", body[-1][0] if body else lineno)
    rows = []
    for lineno, toks in body:
        if len(toks) != ncols:
            raise FormatError(f"expected {ncols} entries, found {len(toks)}", lineno)
        rows.append([_int(t, lineno) for t in toks])
    matrix = FMatrix.from_rows(rows, field, ncols)
    if stab_n is not None and 2 * stab_n != ncols:
        raise FormatError(f"stabilizer n={stab_n} needs {2 * stab_n} columns, matrix has {ncols}")
    return MatrixFile(matrix, stab_n)


def format_matrix(m: FMatrix, stabilizer: bool = False) -> str:
    out = []
    if stabilizer:
        out.append(f"stabilizer n={m.cols // 2}")
    out.append(f"field {m.field.p}")
    out.append(f"matrix {m.rows} {m.cols}")
    out.extend(" ".join(str(x) for x in m.row(i)) for i in range(m.rows))
    return "\n".join(out) + "\n"


def _parse_ground_and_bases(text: str):
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "ground" or len(lines[0][1]) != 2:
        raise FormatError("expected 'ground <n>'", lines[0][0] if lines else None)
    n = _int(lines[0][1][1], lines[0][0])
    bases = []
    for lineno, toks in lines[1:]:
        if toks[0] != "basis":
            raise FormatError(f"expected 'basis ...', got {toks[0]!r}", lineno)
        try:
            bases.append((lineno, [JElement.parse(t) for t in toks[1:]]))
        except FormatError as exc:
            raise FormatError(str(exc), lineno) from None
    if not bases:
        raise FormatError("no 'basis' lines")
    return n, bases


def parse_matroid(text: str) -> SymplecticMatroid:
    n, bases = _parse_ground_and_bases(text)
    sets = []
    for lineno, elems in bases:
        try:
            sets.append(AdmissibleSet.of(elems, n))
        except SymatroidError as exc:
            raise FormatError(str(exc), lineno) from None
    try:
        return SymplecticMatroid.from_bases(n, sets)
    except SymatroidError as exc:
        raise FormatError(str(exc)) from None


def parse_ordinary_matroid(text: str) -> OrdinaryMatroid:
    n, bases = _parse_ground_and_bases(text)
    plain = []
    for lineno, elems in bases:
        if any(e.starred for e in elems):
            raise FormatError("ordinary matroid bases cannot contain starred elements", lineno)
        plain.append([e.index for e in elems])
    try:
        return OrdinaryMatroid.from_bases(n, plain)
    except SymatroidError as exc:
        raise FormatError(str(exc)) from None


def format_set(s: AdmissibleSet) -> str:
    return " ".join(str(e) for e in s.elements())


def format_matroid(m: SymplecticMatroid) -> str:
    return "".join([f"ground {m.n}\n"] + [f"basis {format_set(b)}".rstrip() + "\n" for b in m.bases])


@dataclass(frozen=True)
class GraphFile:
    graph: WGraph
    labeling: EdgeLabeling | None


_KV = re.compile(r"(weight|label)=(\S+)")


def parse_graph(text: str) -> GraphFile:
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "graph" or len(lines[0][1]) != 2:
        raise FormatError("expected 'graph <V>'", lines[0][0] if lines else None)
    order = _int(lines[0][1][1], lines[0][0])
    edges, labels = [], []
    for lineno, toks in lines[1:]:
        if toks[0] != "edge" or len(toks) < 3:
            raise FormatError("expected 'edge <u> <v> [weight=<w>] [label=<i|i*>]'", lineno)
        u, v = _int(toks[1], lineno), _int(toks[2], lineno)
        weight, label = 1, None
        for tok in toks[3:]:
            m = _KV.fullmatch(tok)
            if not m:
                raise FormatError(f"unknown edge attribute {tok!r}", lineno)
            if m.group(1) == "weight":
                weight = _int(m.group(2), lineno)
            else:
                try:
                    label = JElement.parse(m.group(2))
                except FormatError as exc:
                    raise FormatError(str(exc), lineno) from None
        edges.append((u, v, weight))
        labels.append(label)
    try:
        graph = WGraph(order, tuple(edges))
        if all(lab is None for lab in labels):
            labeling = None
        elif any(lab is None for lab in labels):
            raise FormatError("either every edge carries a label or none does")
        else:
            labeling = EdgeLabeling(tuple(labels))
    except FormatError:
        raise
    except SymatroidError as exc:
        raise FormatError(str(exc)) from None
    return GraphFile(graph, labeling)


def format_graph(g: WGraph, labeling: EdgeLabeling | None = None) -> str:
    out = [f"graph {g.order}"]
    for i, (u, v, w) in enumerate(g.edges):
        line = f"edge {u} {v}"
        if w != 1:
            line += f" weight={w}"
        if labeling is not None:
            line += f" label={labeling.labels[i]}"
        out.append(line)
    return "\n".join(out) + "\n"


def read_text(path: str | Path) -> str:
    return Path(path).read_text()
