"""Batch command-line front end.

Exit codes: 0 success, 2 validation error (owning module's error name on
stderr), 64 usage error or unknown verb, 65 unreadable or ill-formed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import ffmat, formats, graphs, poly, qss, smatroid, sympl, transform
from .errors import FormatError, NotLagrangian, SymatroidError
from .smatroid import JElement, SymplecticMatroid

EX_USAGE = 64
EX_DATAERR = 65
EX_VALIDATION = 2

VERBS = (
    "isotropic", "matroid", "circuits", "maximality", "homogeneous", "dual",
    "contract", "truncate", "lift", "dsum", "torus", "poly-tm", "poly-interlace",
    "poly-verify", "graph-state", "graphical", "code-info", "qss", "lift-isd",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Report:
    """One record per line in tsv/structured mode; readable text in human mode."""

    def __init__(self, fmt: str, out: TextIO):
        self.fmt = fmt
        self.out = out

    def _emit(self, kind: str, payload, human: str):
        if self.fmt == "human":
            print(human, file=self.out)
        elif self.fmt == "tsv":
            text = " ".join(payload) if isinstance(payload, list) else str(payload)
            print(f"{kind}\t{text}", file=self.out)
        else:
            key = "elements" if isinstance(payload, list) else "value"
            print(json.dumps({"record": kind, key: payload}), file=self.out)

    def value(self, kind: str, val):
        self._emit(kind, val, f"{kind} {val}")

    def set(self, kind: str, elements: Sequence):
        elems = [str(e) for e in elements]
        self._emit(kind, elems, " ".join([kind] + elems))

    def note(self, text: str):
        if self.fmt == "human":
            print(f"# {text}", file=self.out)

    def raw(self, kind: str, text: str):
        """Multi-line text block (matrices); one record per line elsewhere."""
        if self.fmt == "human":
            self.out.write(text if text.endswith("\n") else text + "\n")
        else:
            for line in text.splitlines():
                self._emit(kind, line, line)


def _yn(b: bool) -> str:
    return "yes" if b else "no"


# ---------------------------------------------------------------------------
# loading


def _load(path: str, args):
    text = formats.read_text(path)
    kind = formats.detect_kind(text)
    if kind == "matrix":
        return kind, formats.parse_matrix(text, args.field)
    if kind == "matroid":
        return kind, text
    return kind, formats.parse_graph(text)


def _matrix(path: str, args) -> ffmat.FMatrix:
    kind, obj = _load(path, args)
    if kind != "matrix":
        raise FormatError(f"{path}: expected a matrix file, got a {kind} file")
    return obj.matrix


def _graph(path: str, args) -> formats.GraphFile:
    kind, obj = _load(path, args)
    if kind != "graph":
        raise FormatError(f"{path}: expected a graph file, got a {kind} file")
    return obj


def _matroid(path: str, args) -> SymplecticMatroid:
    kind, obj = _load(path, args)
    if kind == "matrix":
        return smatroid.bases_from_representation(obj.matrix)
    if kind == "matroid":
        return formats.parse_matroid(obj)
    return graphs.lagrangian_from_graph(obj.graph, args.field or 2)


def _emit_matroid(rep: Report, m: SymplecticMatroid, kind: str = "basis"):
    rep.value("ground", m.n)
    rep.note(f"rank {m.k}, {len(m.masks)} bases")
    for b in m.bases:
        rep.set(kind, b.elements())


# ---------------------------------------------------------------------------
# verbs


def cmd_isotropic(args, rep):
    m = _matrix(args.file, args)
    rep.value("isotropic", _yn(sympl.is_isotropic(m)))


def cmd_matroid(args, rep):
    _emit_matroid(rep, _matroid(args.file, args))


def cmd_circuits(args, rep):
    m = _matroid(args.file, args)
    cs = smatroid.circuits(m)
    rep.note(f"{len(cs)} circuits")
    for c in cs:
        rep.set("circuit", c.elements())


def cmd_maximality(args, rep):
    m = _matroid(args.file, args)
    bad = smatroid.find_maximality_violation(m)
    rep.value("maximality", "PASS" if bad is None else "FAIL")
    if bad is not None:
        rep.set("violating-ordering", bad.elements)


def cmd_homogeneous(args, rep):
    kind, obj = _load(args.file, args)
    m = _matroid(args.file, args)
    rep.value("homogeneous", _yn(smatroid.is_homogeneous(m)))
    rep.value("lagrangian", _yn(smatroid.is_lagrangian(m)))
    if kind == "matrix":
        rep.value("homogeneous-form", _yn(sympl.is_homogeneous_form(sympl.make_stabilizer(obj.matrix))))


def cmd_dual(args, rep):
    m = _matroid(args.file, args)
    d = smatroid.lagrangian_dual(m)
    _emit_matroid(rep, d)
    rep.value("self-dual", _yn(d.masks == m.masks))
    for c in smatroid.cocircuits(m):
        rep.set("cocircuit", c.elements())


def cmd_contract(args, rep):
    m = _matroid(args.file, args)
    a = JElement.parse(args.element)
    out = transform.contraction(m, a)
    if args.relabel:
        out = smatroid.relabel_without(out, a.index)
    _emit_matroid(rep, out)


def cmd_truncate(args, rep):
    out = transform.truncation(_matroid(args.file, args))
    if out.is_degenerate:
        rep.note("degenerate: rank 0")
    _emit_matroid(rep, out)


def cmd_lift(args, rep):
    _emit_matroid(rep, transform.higgs_lift(_matroid(args.file, args)))


def cmd_dsum(args, rep):
    _emit_matroid(rep, transform.direct_sum(_matroid(args.file, args), _matroid(args.other, args)))


def cmd_torus(args, rep):
    s = sympl.make_stabilizer(_matrix(args.file, args))
    t = [int(x) for x in args.t.split(",")]
    out = sympl.torus_action(s, t)
    rep.raw("row", formats.format_matrix(out.gens, stabilizer=True))
    same = smatroid.bases_from_representation(out.gens) == smatroid.bases_from_representation(s.gens)
    rep.note(f"bases unchanged: {_yn(same)}")


def _emit_poly(rep, label, p: poly.ShiftedPolynomial):
    if label:
        rep.note(label)
    shifted = "[" + ", ".join(str(c) for c in p.coeffs) + "]"
    mono = "[" + ", ".join(str(c) for c in p.monomial_coeffs()) + "]"
    rep._emit("(x-1)-basis", list(map(str, p.coeffs)), f"(x-1)-basis: {shifted}")
    rep._emit("x-basis", list(map(str, p.monomial_coeffs())), f"x-basis: {mono}")


def cmd_poly_tm(args, rep):
    _emit_poly(rep, None, poly.restricted_tutte_martin(_matroid(args.file, args), cap=args.cap or poly.TM_CAP))


def cmd_poly_interlace(args, rep):
    _emit_poly(rep, None, poly.interlace(_graph(args.file, args).graph))


def cmd_poly_verify(args, rep):
    g = _graph(args.file, args).graph
    tm = poly.restricted_tutte_martin(graphs.lagrangian_from_graph(g, 2))
    q = poly.interlace(g)
    _emit_poly(rep, "restricted Tutte-Martin of [I|A]", tm)
    _emit_poly(rep, "interlace", q)
    rep.value("equal", _yn(tm == q))


def cmd_graph_state(args, rep):
    gf = _graph(args.file, args)
    s = graphs.graph_state_stabilizer(gf.graph, args.field or 2)
    if args.pauli:
        rep.raw("pauli", "\n".join(str(sympl.format_pauli(v)) for v in s.generators()))
    else:
        rep.raw("row", formats.format_matrix(s.gens, stabilizer=True))


def cmd_graphical(args, rep):
    gf = _graph(args.file, args)
    m = graphs.graphical_symplectic_matroid(gf.graph, gf.labeling, args.star_mode)
    expected = graphs.graphical_rank(gf.graph)
    _emit_matroid(rep, m)
    if m.k != expected:
        rep.note(f"rank mismatch: expected {expected}, got {m.k}")
    for b in m.bases:
        rep.note("star-image " + " ".join(str(e) for e in b.star().elements()))
        if rep.fmt != "human":
            rep.set("star-basis", b.star().elements())


def cmd_code_info(args, rep):
    s = sympl.make_stabilizer(_matrix(args.file, args))
    m = smatroid.bases_from_representation(s.gens)
    rep.value("n", s.n)
    rep.value("k", s.k)
    rep.value("field", s.field.p)
    rep.value("homogeneous-form", _yn(sympl.is_homogeneous_form(s)))
    rep.value("distance", sympl.code_distance(s, args.cap or ffmat.DEFAULT_CAP))
    cs = m.circuit_masks
    rep.value("min-circuit-size", min((c.bit_count() for c in cs), default="none"))


def _emit_structure(rep, verdict: qss.DealerVerdict):
    rep.value("dealer", verdict.dealer)
    if verdict.degenerate:
        rep.value("structure", "DEGENERATE")
    if verdict.structure is not None:
        for s in verdict.structure.minimal_sets:
            rep.set("set", sorted(s))
    rep.value("verdict", "VALID" if verdict.valid else "INVALID")


def cmd_qss(args, rep):
    m = _matroid(args.file, args)
    if not smatroid.is_lagrangian(m):
        raise NotLagrangian(f"rank {m.k} != n = {m.n}")
    if args.all_dealers:
        report = qss.secret_sharing_report(m)
        for v in report.values():
            _emit_structure(rep, v)
        rep.value("secret-sharing", _yn(all(v.valid for v in report.values())))
        return
    _emit_structure(rep, qss.dealer_verdict(m, args.dealer))


def cmd_lift_isd(args, rep):
    om = formats.parse_ordinary_matroid(formats.read_text(args.file))
    m = qss.lift_identically_self_dual(om)
    _emit_matroid(rep, m)
    rep.note(f"self-dual: {_yn(smatroid.is_self_dual(m))}")


HANDLERS = {verb: globals()["cmd_" + verb.replace("-", "_")] for verb in VERBS}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", type=int, default=None, help="prime modulus override")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap")
    common.add_argument("--star-mode", choices=("within", "relative"), default="within")
    common.add_argument("--format", choices=("human", "tsv", "structured"), default="human")

    parser = _Parser(prog="symatroid", description="Symplectic matroids of stabilizer codes.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    one_file = {
        "isotropic": "report whether a matrix is isotropic",
        "matroid": "bases of the represented symplectic matroid",
        "circuits": "minimal admissible sets in no basis",
        "maximality": "run the Maximality-condition oracle (n <= 7)",
        "homogeneous": "homogeneity and Lagrangian predicates",
        "dual": "Lagrangian dual, self-duality and cocircuits",
        "truncate": "truncation",
        "lift": "Higgs lift (superset closure, oracle-checked)",
        "poly-tm": "restricted Tutte-Martin polynomial",
        "poly-interlace": "interlace polynomial of a graph",
        "poly-verify": "compare Tutte-Martin of [I|A] with the interlace polynomial",
        "graphical": "graphical symplectic matroid of a graph",
        "code-info": "code parameters, brute-force distance, smallest circuit",
        "lift-isd": "lift an identically self-dual ordinary matroid",
    }
    subs = {}
    for verb in VERBS:
        p = sub.add_parser(verb, parents=[common], help=one_file.get(verb))
        p.add_argument("file")
        subs[verb] = p
    subs["contract"].add_argument("--element", required=True, help="element such as 3 or 3*")
    subs["contract"].add_argument("--relabel", action="store_true", help="drop the contracted index pair")
    subs["dsum"].add_argument("other")
    subs["torus"].add_argument("--t", required=True, help="comma-separated nonzero residues")
    subs["graph-state"].add_argument("--pauli", action="store_true", help="print Pauli strings")
    group = subs["qss"].add_mutually_exclusive_group(required=True)
    group.add_argument("--dealer", type=int)
    group.add_argument("--all-dealers", action="store_true")
    return parser


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(argv)
    verb = argv[0] if argv else None
    if verb not in VERBS and verb not in ("-h", "--help"):
        print(f"error: unknown verb {verb!r}; expected one of: {', '.join(VERBS)}", file=err)
        return EX_USAGE
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EX_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    rep = Report(args.format, out)
    try:
        HANDLERS[args.verb](args, rep)
    except FormatError as exc:
        print(f"error: FormatError: {exc}", file=err)
        return EX_DATAERR
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=err)
        return EX_DATAERR
    except SymatroidError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EX_VALIDATION
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
