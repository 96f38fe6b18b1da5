"""Text format for (graded) Brauer graphs.

One directive per line, ``#`` starts a comment::

    halfedges: 1+ 1- 2+ 2-
    sigma: (1+ 2+)(1- 2-)
    iota: (1+ 1-)(2+ 2-)
    grading: 1+=0 1-=1 2+=1 2-=0
    labels: 1+=alpha 2+=beta

``halfedges`` and ``sigma`` are required; tokens missing from ``sigma`` are
fixed points. ``iota`` defaults to pairing ``X+`` with ``X-``. ``labels``
names the arrows of the quiver by their source half-edge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import InvalidGraphError, KauerError
from .graph import TOKEN_RE, BrauerGraph, implicit_pairing
from .moves import GradedBrauerGraph
from .permutation import Permutation

_DIRECTIVE_RE = re.compile(r"([a-z]+)\s*:(.*)\Z")
_CYCLES_RE = re.compile(r"(\(\s*[^()\s][^()]*\)\s*)*\Z")
_LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")
DIRECTIVES = ("halfedges", "sigma", "iota", "grading", "labels")


class ParseError(KauerError):
    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        self.path = None
        super().__init__(f"line {line}: {message}")


@dataclass
class GraphDocument:
    halfedges: tuple[str, ...]
    sigma: tuple[tuple[str, ...], ...]
    iota: tuple[tuple[str, ...], ...] | None = None
    grading: dict[str, int] | None = None
    labels: dict[str, str] = field(default_factory=dict)

    def graph(self) -> BrauerGraph:
        io = (implicit_pairing(self.halfedges) if self.iota is None
              else Permutation.from_cycles(self.iota, self.halfedges))
        return BrauerGraph(self.halfedges, io, Permutation.from_cycles(self.sigma, self.halfedges))

    def graded(self) -> GradedBrauerGraph:
        if self.grading is None:
            raise KauerError("document has no grading")
        return GradedBrauerGraph(self.graph(), self.grading)


def _cycles(text: str, lineno: int, known: set[str], what: str) -> tuple[tuple[str, ...], ...]:
    text = text.strip()
    if not _CYCLES_RE.match(text):
        raise ParseError(lineno, f"malformed cycle notation in {what}: {text!r}")
    cycles = tuple(tuple(m.split()) for m in re.findall(r"\(([^()]*)\)", text))
    seen: set[str] = set()
    for c in cycles:
        for t in c:
            if t not in known:
                raise ParseError(lineno, f"{what} mentions unknown half-edge {t}")
            if t in seen:
                raise ParseError(lineno, f"{what} mentions {t} twice")
            seen.add(t)
    return cycles


def _pairs(text: str, lineno: int, what: str) -> list[tuple[str, str]]:
    out = []
    for item in text.split():
        key, eq, val = item.partition("=")
        if not eq or not key or not val:
            raise ParseError(lineno, f"malformed {what} entry {item!r}")
        out.append((key, val))
    return out


def parse(text: str) -> GraphDocument:
    """Parse a document; every error carries its 1-based line number."""
    found: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _DIRECTIVE_RE.match(line)
        if not m:
            raise ParseError(lineno, f"expected 'directive: value', got {line!r}")
        name, value = m.group(1), m.group(2)
        if name not in DIRECTIVES:
            raise ParseError(lineno, f"unknown directive {name!r}")
        if name in found:
            raise ParseError(lineno, f"repeated directive {name!r}")
        found[name] = (lineno, value)
    last = len(text.splitlines()) or 1
    for name in ("halfedges", "sigma"):
        if name not in found:
            raise ParseError(last, f"missing directive {name!r}")

    lineno, value = found["halfedges"]
    halfedges = tuple(value.split())
    seen: set[str] = set()
    for t in halfedges:
        if not TOKEN_RE.match(t):
            raise ParseError(lineno, f"malformed token {t!r}")
        if t in seen:
            raise ParseError(lineno, f"duplicate token {t}")
        seen.add(t)

    lineno, value = found["sigma"]
    sigma = _cycles(value, lineno, seen, "sigma")

    iota = None
    if "iota" in found:
        lineno, value = found["iota"]
        iota = _cycles(value, lineno, seen, "iota")
        bad = [c for c in iota if len(c) != 2]
        covered = {t for c in iota for t in c}
        if bad or covered != seen:
            missing = sorted(seen - covered)
            detail = (f"cycle ({' '.join(bad[0])}) is not a pair" if bad
                      else f"{missing[0]} is fixed")
            raise ParseError(lineno, f"iota is not a fixed-point-free involution: {detail}")
    else:
        try:
            implicit_pairing(halfedges)
        except InvalidGraphError as exc:
            raise ParseError(found["halfedges"][0], str(exc)) from None

    grading = None
    if "grading" in found:
        lineno, value = found["grading"]
        grading = {}
        for key, val in _pairs(value, lineno, "grading"):
            if key not in seen:
                raise ParseError(lineno, f"grading mentions unknown half-edge {key}")
            if key in grading:
                raise ParseError(lineno, f"grading mentions {key} twice")
            try:
                grading[key] = int(val)
            except ValueError:
                raise ParseError(lineno, f"grading value for {key} is not an integer: {val!r}") from None
        if set(grading) != seen:
            raise ParseError(lineno, f"grading misses half-edge {sorted(seen - set(grading))[0]}")

    labels: dict[str, str] = {}
    if "labels" in found:
        lineno, value = found["labels"]
        for key, val in _pairs(value, lineno, "labels"):
            if key not in seen:
                raise ParseError(lineno, f"labels mention unknown half-edge {key}")
            if not _LABEL_RE.match(val):
                raise ParseError(lineno, f"malformed arrow label {val!r}")
            labels[key] = val
        if len(set(labels.values())) != len(labels):
            raise ParseError(lineno, "arrow labels are not distinct")

    return GraphDocument(halfedges, sigma, iota, grading, labels)


def parse_graph(text: str) -> BrauerGraph:
    return parse(text).graph()


def _canonical_cycles(p: Permutation) -> str:
    return str(p) if not p.is_identity() else ""


def serialize(g: BrauerGraph, grading=None, labels=None) -> str:
    """Canonical document text (fixed directive order, LF endings)."""
    lines = ["halfedges: " + " ".join(g.halfedges)]
    lines.append(("sigma: " + _canonical_cycles(g.sigma)).rstrip())
    try:
        implicit = implicit_pairing(g.halfedges) == g.iota
    except InvalidGraphError:
        implicit = False
    if not implicit:
        lines.append("iota: " + str(g.iota))
    if grading is not None:
        lines.append("grading: " + " ".join(f"{h}={grading[h]}" for h in g.halfedges))
    if labels:
        lines.append("labels: " + " ".join(f"{h}={labels[h]}" for h in g.halfedges if h in labels))
    return "\n".join(lines) + "\n"


def serialize_document(doc: GraphDocument) -> str:
    return serialize(doc.graph(), doc.grading, doc.labels)


def read_document(path) -> GraphDocument:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse(text)
    except ParseError as exc:
        exc.path = str(path)
        raise


def read_cut(text: str) -> list[str]:
    """Cut file: one arrow label or source half-edge token per line."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out
