"""Quiver and relations of a Brauer graph algebra, admissible cuts, gentle
quotients.

Nodes of the quiver are the edges of the graph. Every half-edge ``h`` at a
vertex of valence at least two carries one arrow ``[h] -> [sigma h]``.
Paths are stored in traversal order (first arrow first) and printed right to
left, so the path ``a`` then ``b`` prints as ``ba``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import CutError, GradingError
from .graph import BrauerGraph, edge_halfedges, edge_name, edge_names, edges, vertices
from .moves import (GradedBrauerGraph, graded_multi_move, kauer_move, maximal_sectors,
                    stable_subset)

Path = tuple  # tuple[str, ...] of arrow labels, traversal order


@dataclass(frozen=True)
class Arrow:
    label: str
    source_halfedge: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True)
class Quiver:
    nodes: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(label)

    def labels(self) -> list[str]:
        return [a.label for a in self.arrows]

    def out_arrows(self, node: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == node]

    def in_arrows(self, node: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == node]

    def to_text(self) -> str:
        return "".join(f"{a.label}: {a.source} -> {a.target} [{a.degree}]\n" for a in self.arrows)

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f'  "{n}";' for n in self.nodes]
        lines += [f'  "{a.source}" -> "{a.target}" [label="{a.label}", degree={a.degree}];'
                  for a in self.arrows]
        lines.append("}")
        return "\n".join(lines) + "\n"


def auto_label(h: str) -> str:
    return "a" + h


def _is_truncated(g: BrauerGraph, h: str) -> bool:
    return g.sigma(h) == h


def arrow_labels(g: BrauerGraph, labels: Mapping[str, str] | None = None) -> dict[str, str]:
    """Label of the arrow carried by each non-truncated half-edge."""
    labels = labels or {}
    out = {h: labels.get(h, auto_label(h)) for h in g.halfedges if not _is_truncated(g, h)}
    if len(set(out.values())) != len(out):
        raise ValueError("arrow labels are not distinct")
    return out


def quiver_of(g: BrauerGraph, labels: Mapping[str, str] | None = None,
              grading: Mapping[str, int] | None = None) -> Quiver:
    lab = arrow_labels(g, labels)
    arrows = []
    for v in vertices(g):
        if len(v) < 2:
            continue
        for h in v:
            arrows.append(Arrow(lab[h], h, edge_name(g, h), edge_name(g, g.sigma(h)),
                                grading[h] if grading else 0))
    arrows.sort(key=lambda a: a.source_halfedge)
    return Quiver(tuple(edge_names(g)), tuple(arrows))


def format_path(path: Sequence[str]) -> str:
    """Right-to-left rendering; labels are separated by spaces unless all are
    single characters."""
    sep = "" if all(len(x) == 1 for x in path) else " "
    return sep.join(reversed(path))


# -- special cycles and relations ------------------------------------------------


@dataclass(frozen=True)
class SpecialCycle:
    vertex: tuple[str, ...]
    base_edge: str
    halfedges: tuple[str, ...]
    arrows: Path

    def __str__(self) -> str:
        return format_path(self.arrows)


def _rep(g: BrauerGraph, lab: Mapping[str, str], h: str) -> SpecialCycle:
    run = g.sigma.orbit(h)
    k = run.index(min(run))
    return SpecialCycle(run[k:] + run[:k], edge_name(g, h), run, tuple(lab[x] for x in run))


def special_cycles(g: BrauerGraph, labels: Mapping[str, str] | None = None) -> list[SpecialCycle]:
    """One representative per non-truncated vertex, starting at its least half-edge."""
    lab = arrow_labels(g, labels)
    return [_rep(g, lab, v[0]) for v in vertices(g) if len(v) >= 2]


def special_i_cycles(g: BrauerGraph, edge: str, labels: Mapping[str, str] | None = None) -> list[SpecialCycle]:
    """The special cycles beginning and ending at node ``edge``."""
    lab = arrow_labels(g, labels)
    return [_rep(g, lab, h) for h in edge_halfedges(g, edge) if not _is_truncated(g, h)]


class Relation(NamedTuple):
    kind: str  # "I", "II" or "III"
    paths: tuple  # two paths for kind I, one otherwise

    def __str__(self) -> str:
        if self.kind == "I":
            return f"I: {format_path(self.paths[0])} - {format_path(self.paths[1])}"
        return f"{self.kind}: {format_path(self.paths[0])}"


@dataclass(frozen=True)
class RelationSet:
    relations: tuple[Relation, ...]

    def __iter__(self) -> Iterator[Relation]:
        return iter(self.relations)

    def __len__(self) -> int:
        return len(self.relations)

    def of_kind(self, kind: str) -> list[Relation]:
        return [r for r in self.relations if r.kind == kind]

    def to_text(self) -> str:
        return "".join(str(r) + "\n" for r in self.relations)


_KIND_ORDER = {"I": 0, "II": 1, "III": 2}


def relations_of(g: BrauerGraph, labels: Mapping[str, str] | None = None) -> RelationSet:
    """Generators of the ideal: (I) the two special i-cycles through an edge
    agree, (II) a special cycle followed by its first arrow vanishes, (III)
    length-2 paths that are not part of a special cycle vanish."""
    lab = arrow_labels(g, labels)
    rels: list[tuple] = []
    for e in edges(g):
        h1, h2 = sorted(e)
        if not _is_truncated(g, h1) and not _is_truncated(g, h2):
            rels.append((edge_name(g, h1), Relation("I", (_rep(g, lab, h1).arrows, _rep(g, lab, h2).arrows))))
    for h in g.halfedges:
        if _is_truncated(g, h):
            continue
        rep = _rep(g, lab, h).arrows
        rels.append((edge_name(g, h), Relation("II", (rep + (lab[h],),))))
        nxt = g.iota(g.sigma(h))
        if not _is_truncated(g, nxt):
            rels.append((edge_name(g, h), Relation("III", ((lab[h], lab[nxt]),))))
    rels.sort(key=lambda t: (_KIND_ORDER[t[1].kind], t[0], t[1].paths))
    return RelationSet(tuple(r for _, r in rels))


# -- dimension ----------------------------------------------------------------------


def algebra_dimension(g: BrauerGraph) -> int:
    """Dimension of the Brauer graph algebra (multiplicity one).

    One idempotent per edge, the proper non-trivial prefixes of every special
    i-cycle, and one socle element per edge carrying a special cycle.
    """
    n_edges = len(edges(g))
    prefixes = sum(len(v) - 1 for v in vertices(g) if len(v) >= 2 for _ in v)
    socle = sum(1 for e in edges(g) if any(not _is_truncated(g, h) for h in e))
    return n_edges + prefixes + socle


# -- admissible cuts ------------------------------------------------------------------


def resolve_cut(g: BrauerGraph, items: Iterable[str], labels: Mapping[str, str] | None = None) -> frozenset[str]:
    """Normalise a cut given by arrow labels and/or source half-edge tokens."""
    lab = arrow_labels(g, labels)
    by_label = {v: k for k, v in lab.items()}
    out = set()
    for x in items:
        if x in by_label:
            out.add(x)
        elif x in lab:
            out.add(lab[x])
        else:
            raise CutError(f"unknown arrow {x}")
    return frozenset(out)


@dataclass(frozen=True)
class CutCheck:
    admissible: bool
    diagnostics: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.admissible


def is_admissible_cut(g: BrauerGraph, cut: Iterable[str], labels: Mapping[str, str] | None = None) -> CutCheck:
    cut = resolve_cut(g, cut, labels)
    lab = arrow_labels(g, labels)
    problems = []
    for v in vertices(g):
        if len(v) < 2:
            continue
        chosen = [lab[h] for h in v if lab[h] in cut]
        if len(chosen) != 1:
            problems.append(f"special cycle at ({' '.join(v)}) has {len(chosen)} cut arrows"
                            + (f": {' '.join(sorted(chosen))}" if chosen else ""))
    return CutCheck(not problems, tuple(problems))


def cut_to_grading(g: BrauerGraph, cut: Iterable[str], labels: Mapping[str, str] | None = None) -> dict[str, int]:
    """Degree 1 on cut arrows and on the sole half-edge of truncated vertices."""
    cut = resolve_cut(g, cut, labels)
    lab = arrow_labels(g, labels)
    return {h: 1 if _is_truncated(g, h) or lab[h] in cut else 0 for h in g.halfedges}


def grading_to_cut(g: BrauerGraph, d: Mapping[str, int], labels: Mapping[str, str] | None = None) -> frozenset[str]:
    lab = arrow_labels(g, labels)
    if any(d[h] not in (0, 1) for h in g.halfedges):
        raise GradingError("grading is not {0,1}-valued")
    return frozenset(lab[h] for h in g.halfedges if not _is_truncated(g, h) and d[h] == 1)


@dataclass(frozen=True)
class GentleQuotient:
    """Presentation of ``kQ / <I, cut>``: the remaining arrows and the
    length-2 monomial relations among them."""

    quiver: Quiver
    relations: tuple[Path, ...]
    cut: frozenset[str]

    def to_text(self) -> str:
        out = self.quiver.to_text()
        out += "".join(f"zero: {format_path(p)}\n" for p in self.relations)
        return out


def gentle_quotient(g: BrauerGraph, cut: Iterable[str], labels: Mapping[str, str] | None = None) -> GentleQuotient:
    cut = resolve_cut(g, cut, labels)
    if not is_admissible_cut(g, cut, labels):
        raise CutError("inadmissible cut")
    q = quiver_of(g, labels)
    kept = tuple(a for a in q.arrows if a.label not in cut)
    rels = tuple(r.paths[0] for r in relations_of(g, labels).of_kind("III")
                 if not set(r.paths[0]) & cut)
    return GentleQuotient(Quiver(q.nodes, kept), rels, cut)


@dataclass(frozen=True)
class GentleCheck:
    gentle: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.gentle


def gentle_check(pres: GentleQuotient) -> GentleCheck:
    """Check the gentle axioms on a quiver with monomial relations."""
    q = pres.quiver
    problems = []
    by_label = {a.label: a for a in q.arrows}
    zero = set()
    for p in pres.relations:
        if len(p) != 2:
            problems.append(f"relation {format_path(p)} is not quadratic")
            continue
        a, b = (by_label.get(x) for x in p)
        if a is None or b is None or a.target != b.source:
            problems.append(f"relation {format_path(p)} is not a path")
        zero.add(tuple(p))
    for n in q.nodes:
        if len(q.out_arrows(n)) > 2:
            problems.append(f"node {n} has more than two outgoing arrows")
        if len(q.in_arrows(n)) > 2:
            problems.append(f"node {n} has more than two incoming arrows")
    successor: dict[str, str] = {}
    for a in q.arrows:
        after = [b.label for b in q.out_arrows(a.target)]
        before = [b.label for b in q.in_arrows(a.source)]
        fine_after = [b for b in after if (a.label, b) not in zero]
        fine_before = [b for b in before if (b, a.label) not in zero]
        if len(fine_after) > 1 or len(after) - len(fine_after) > 1:
            problems.append(f"arrow {a.label} violates the gentle condition on the right")
        if len(fine_before) > 1 or len(before) - len(fine_before) > 1:
            problems.append(f"arrow {a.label} violates the gentle condition on the left")
        if len(fine_after) == 1:
            successor[a.label] = fine_after[0]
    # finite dimension: following non-zero compositions must terminate
    for start in successor:
        x, steps = start, 0
        while x in successor and steps <= len(q.arrows):
            x = successor[x]
            steps += 1
        if steps > len(q.arrows):
            problems.append(f"unbounded path through {start}")
            break
    return GentleCheck(not problems, tuple(problems))


# -- the combinatorial side of mutation -------------------------------------------------


def main_theorem_cut(g: BrauerGraph, hprime: Iterable[str]) -> dict[str, int]:
    """Admissible cut (as a grading) vanishing on every maximal sector.

    At a vertex meeting both ``hprime`` and its complement the degree-1
    half-edge is the one just before a maximal sector; elsewhere it is the
    least half-edge of the vertex.
    """
    sub = stable_subset(g, hprime)
    secs = maximal_sectors(g, sub)
    d = {h: 0 for h in g.halfedges}
    for v in vertices(g):
        inside = [h for h in v if h in sub]
        if inside and len(inside) < len(v):
            h = next(s.h for s in secs if s.h in v)
            d[g.sigma.inverse()(h)] = 1
        else:
            d[min(v)] = 1
    return d


@dataclass(frozen=True)
class TheoremCheck:
    holds: bool
    cut: Mapping[str, int]
    moved: GradedBrauerGraph
    admissible: bool
    orientation_matches: bool

    def __bool__(self) -> bool:
        return self.holds


def main_theorem_witness(g: BrauerGraph, hprime: Iterable[str]) -> TheoremCheck:
    sub = stable_subset(g, hprime)
    d = main_theorem_cut(g, sub)
    moved = graded_multi_move(GradedBrauerGraph(g, d), sub)
    admissible = all(x in (0, 1) for x in moved.grading.values())
    if admissible:
        cut = grading_to_cut(moved.graph, moved.grading)
        admissible = bool(is_admissible_cut(moved.graph, cut)) and \
            cut_to_grading(moved.graph, cut) == dict(moved.grading)
    matches = moved.graph.sigma == kauer_move(g, sub).sigma
    return TheoremCheck(admissible and matches, d, moved, admissible, matches)


def check_main_theorem(g: BrauerGraph, hprime: Iterable[str]) -> bool:
    """Graded moves under the constructed cut end on an admissible cut of
    the generalized Kauer move of ``hprime``."""
    return main_theorem_witness(g, hprime).holds


# -- comparing presentations up to arrow naming ------------------------------------------------


def quiver_isomorphisms(q1: Quiver, q2: Quiver, fix_nodes: bool = True) -> Iterator[dict[str, str]]:
    """Arrow-label bijections ``q1 -> q2`` induced by quiver isomorphisms.

    With ``fix_nodes`` nodes must map to equally named nodes.
    """
    if len(q1.nodes) != len(q2.nodes) or len(q1.arrows) != len(q2.arrows):
        return
    node_maps = ([dict(zip(q1.nodes, q1.nodes))] if fix_nodes
                 else (dict(zip(q1.nodes, p)) for p in permutations(q2.nodes)))
    for nm in node_maps:
        if fix_nodes and set(q1.nodes) != set(q2.nodes):
            return
        groups: dict[tuple, list[str]] = {}
        for a in q1.arrows:
            groups.setdefault((nm[a.source], nm[a.target]), []).append(a.label)
        targets: dict[tuple, list[str]] = {}
        for a in q2.arrows:
            targets.setdefault((a.source, a.target), []).append(a.label)
        if {k: len(v) for k, v in groups.items()} != {k: len(v) for k, v in targets.items()}:
            continue
        keys = list(groups)
        yield from _arrow_matchings(keys, groups, targets, {})


def _arrow_matchings(keys, groups, targets, acc):
    if not keys:
        yield dict(acc)
        return
    k = keys[0]
    for perm in permutations(targets[k]):
        acc2 = dict(acc)
        acc2.update(zip(groups[k], perm))
        yield from _arrow_matchings(keys[1:], groups, targets, acc2)


def relation_key(rels: Iterable[Relation], rename: Mapping[str, str] | None = None) -> dict[str, frozenset]:
    """Relations grouped by kind, type I as unordered pairs, after renaming arrows."""
    rename = rename or {}
    out: dict[str, set] = {"I": set(), "II": set(), "III": set()}
    for r in rels:
        paths = [tuple(rename.get(x, x) for x in p) for p in r.paths]
        out[r.kind].add(frozenset(paths) if r.kind == "I" else paths[0])
    return {k: frozenset(v) for k, v in out.items()}


def presentations_match(q1: Quiver, rels1: Iterable[Relation], q2: Quiver, rels2: Iterable[Relation],
                        fix_nodes: bool = True) -> dict[str, str] | None:
    """An arrow renaming ``q1 -> q2`` under which the relation sets coincide."""
    rels1 = list(rels1)
    want = relation_key(rels2)
    for m in quiver_isomorphisms(q1, q2, fix_nodes):
        if relation_key(rels1, m) == want:
            return m
    return None
