"""Command line interface.

Exit status: 0 on success or a true answer, 1 on a false answer or a failed
search, 2 on usage, input or precondition errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io
from .errors import KauerError
from .graph import edge_halfedges, is_connected, is_isomorphic, subset_from_edges
from .invariants import DEFAULT_MAX_NODES, invariants, reach
from .moves import Sector, graded_multi_move, graded_sector_move, homogeneity_defects, kauer_move
from .quiver import (algebra_dimension, gentle_check, gentle_quotient, grading_to_cut, is_admissible_cut,
                     main_theorem_witness, quiver_of, relations_of)

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _split(value: str) -> list[str]:
    return [x for x in value.replace(",", " ").split() if x]


def _subset(g, args) -> frozenset[str]:
    if getattr(args, "edges", None):
        return subset_from_edges(g, _split(args.edges))
    if getattr(args, "halfedges", None):
        return frozenset(_split(args.halfedges))
    if getattr(args, "subset", None):
        return subset_from_edges(g, _split(args.subset))
    return frozenset()


def _labels(doc: io.GraphDocument, spec: str | None) -> dict[str, str]:
    if spec is None:
        return dict(doc.labels)
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = spec.replace(",", " ")
    out = {}
    for item in text.split():
        key, eq, val = item.partition("=")
        if not eq:
            raise UsageError(f"malformed label entry {item!r}")
        out[key] = val
    return out


def cmd_validate(args, out) -> int:
    doc = io.read_document(args.file)
    g = doc.graph()
    ok = True
    if doc.grading is not None:
        for v, s in homogeneity_defects(g, doc.grading):
            out.write(f"grading: vertex ({' '.join(v)}) has degree {s}\n")
            ok = False
    rep = invariants(g)
    out.write(f"{'valid' if ok else 'invalid'}: {rep.num_vertices} vertices, {rep.num_edges} edges"
              f"{'' if is_connected(g) else ', disconnected'}\n")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_info(args, out) -> int:
    g = io.read_document(args.file).graph()
    for line in invariants(g).lines():
        out.write(line + "\n")
    out.write(f"connected: {str(is_connected(g)).lower()}\n")
    out.write(f"dimension: {algebra_dimension(g)}\n")
    return EXIT_OK


def cmd_move(args, out) -> int:
    g = io.read_document(args.file).graph()
    out.write(io.serialize(kauer_move(g, _subset(g, args))))
    return EXIT_OK


def cmd_graded_move(args, out) -> int:
    doc = io.read_document(args.file)
    gg = doc.graded()
    g = gg.graph
    if args.all:
        if not args.subset:
            raise UsageError("--all needs --subset")
        res = graded_multi_move(gg, _subset(g, args))
    else:
        h, _, r = args.sector.partition(",")
        try:
            sector = Sector(h.strip(), int(r))
        except ValueError:
            raise UsageError(f"malformed sector {args.sector!r}") from None
        if args.subset:
            sub = _subset(g, args)
        else:
            run = [(g.sigma ** i)(sector.h) for i in range(sector.r + 1)] if sector.h in g.sigma.ground else []
            sub = frozenset(x for h in run for x in edge_halfedges(g, h))
        res = graded_sector_move(gg, sector, sub)
    out.write(io.serialize(res.graph, res.grading))
    return EXIT_OK


def cmd_quiver(args, out) -> int:
    doc = io.read_document(args.file)
    g = doc.graph()
    grading = doc.graded().grading if doc.grading is not None else None
    q = quiver_of(g, _labels(doc, args.labels), grading)
    out.write(q.to_dot() if args.dot else q.to_text())
    return EXIT_OK


def cmd_relations(args, out) -> int:
    doc = io.read_document(args.file)
    out.write(relations_of(doc.graph(), _labels(doc, args.labels)).to_text())
    return EXIT_OK


def cmd_cut(args, out) -> int:
    doc = io.read_document(args.file)
    g = doc.graph()
    labels = _labels(doc, args.labels)
    if args.check:
        with open(args.check, encoding="utf-8") as fh:
            cut = io.read_cut(fh.read())
    elif doc.grading is not None:
        cut = sorted(grading_to_cut(g, doc.grading, labels))
    else:
        raise UsageError("no cut: pass --check CUTFILE or a {0,1} grading in the document")
    check = is_admissible_cut(g, cut, labels)
    if not check:
        out.write("not admissible\n")
        for line in check.diagnostics:
            out.write(f"  {line}\n")
        return EXIT_FALSE
    out.write("admissible\n")
    if args.gentle:
        pres = gentle_quotient(g, cut, labels)
        out.write(pres.to_text())
        res = gentle_check(pres)
        out.write(f"gentle: {str(res.gentle).lower()}\n")
        for line in res.problems:
            out.write(f"  {line}\n")
        return EXIT_OK if res else EXIT_FALSE
    return EXIT_OK


def cmd_iso(args, out) -> int:
    g1 = io.read_document(args.file).graph()
    g2 = io.read_document(args.other).graph()
    res = is_isomorphic(g1, g2)
    if not res:
        out.write("NOT ISOMORPHIC\n")
        return EXIT_FALSE
    out.write("ISOMORPHIC\n")
    for h in g1.halfedges:
        out.write(f"{h} -> {res.mapping[h]}\n")
    return EXIT_OK


def cmd_compare(args, out) -> int:
    r1 = invariants(io.read_document(args.file).graph())
    r2 = invariants(io.read_document(args.other).graph())
    if r1 == r2:
        out.write("EQUAL\n")
        for line in r1.lines():
            out.write(f"  {line}\n")
        return EXIT_OK
    out.write("DIFFERENT\n")
    for a, b in zip(r1.lines(), r2.lines()):
        if a != b:
            name = a.split(":")[0]
            out.write(f"  {name}: {a.split(': ', 1)[1]} vs {b.split(': ', 1)[1]}\n")
    return EXIT_FALSE


def cmd_reach(args, out) -> int:
    src = io.read_document(args.file).graph()
    dst = io.read_document(args.other).graph()
    res = reach(src, dst, args.depth, moves=args.moves, max_nodes=args.max_nodes,
                up_to="labels" if args.labeled else "isomorphism")
    if res.found:
        out.write(f"FOUND in {len(res.path)} moves (explored {res.explored})\n")
        for kind, option in res.path:
            out.write(f"  {kind} {','.join(option)}\n")
        return EXIT_OK
    status = "BUDGET EXHAUSTED" if res.budget_exhausted else "NOT FOUND"
    out.write(f"{status} (explored {res.explored})\n")
    return EXIT_FALSE


def cmd_check_theorem(args, out) -> int:
    g = io.read_document(args.file).graph()
    w = main_theorem_witness(g, _subset(g, args))
    out.write("cut: " + " ".join(f"{h}={w.cut[h]}" for h in g.halfedges) + "\n")
    out.write(f"admissible: {str(w.admissible).lower()}\n")
    out.write(f"orientation matches: {str(w.orientation_matches).lower()}\n")
    out.write(io.serialize(w.moved.graph, w.moved.grading))
    out.write(f"holds: {str(w.holds).lower()}\n")
    return EXIT_OK if w.holds else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kauer", description="Brauer graphs and generalized Kauer moves")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a graph document")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("info", help="print the invariant report")
    s.add_argument("file")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("move", help="apply a generalized Kauer move")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--edges", help="comma separated edge names")
    g.add_argument("--halfedges", help="comma separated half-edge tokens")
    s.set_defaults(func=cmd_move)

    s = sub.add_parser("graded-move", help="move a sector (or all maximal sectors) of a graded graph")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--sector", help="h,r")
    g.add_argument("--all", action="store_true", help="move every maximal sector of --subset")
    s.add_argument("--subset", help="comma separated edge names")
    s.set_defaults(func=cmd_graded_move)

    s = sub.add_parser("quiver", help="print the quiver")
    s.add_argument("file")
    s.add_argument("--dot", action="store_true")
    s.add_argument("--labels", help="label file or inline list h=label,...")
    s.set_defaults(func=cmd_quiver)

    s = sub.add_parser("relations", help="print the relations of the Brauer graph algebra")
    s.add_argument("file")
    s.add_argument("--labels")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("cut", help="check an admissible cut")
    s.add_argument("file")
    s.add_argument("--check", metavar="CUTFILE")
    s.add_argument("--gentle", action="store_true", help="also print and check the gentle quotient")
    s.add_argument("--labels")
    s.set_defaults(func=cmd_cut)

    for name, func, text in (("iso", cmd_iso, "decide isomorphism"),
                             ("compare", cmd_compare, "compare invariant reports")):
        s = sub.add_parser(name, help=text)
        s.add_argument("file")
        s.add_argument("other")
        s.set_defaults(func=func)

    s = sub.add_parser("reach", help="bounded search for a move sequence")
    s.add_argument("file")
    s.add_argument("other")
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--moves", choices=("generalized", "standard"), default="generalized")
    s.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    s.add_argument("--labeled", action="store_true", help="match half-edge names exactly")
    s.set_defaults(func=cmd_reach)

    s = sub.add_parser("check-theorem", help="run the cut construction through the graded moves")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--edges")
    g.add_argument("--halfedges")
    s.set_defaults(func=cmd_check_theorem)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except io.ParseError as exc:
        err.write(f"{exc.path or args.file}: {exc}\n")
    except (UsageError, KauerError, OSError) as exc:
        err.write(f"error: {exc}\n")
    return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
