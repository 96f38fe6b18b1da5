"""Brauer graphs as half-edge triples ``(H, iota, sigma)``.

Vertices are the ``sigma``-orbits, edges the ``iota``-orbits and faces the
orbits of ``sigma * iota`` (``iota`` first). ``sigma`` may have fixed points;
they are valence-1 (truncated) vertices.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import _accel
from .errors import InvalidGraphError, SubsetError
from .permutation import OrbitPartition, Permutation

TOKEN_RE = re.compile(r"[A-Za-z0-9]+[+-]?\Z")


@dataclass(frozen=True)
class Violation:
    halfedge: str | None
    message: str

    def __str__(self) -> str:
        return self.message


def implicit_pairing(tokens: Iterable[str]) -> Permutation:
    """Pair every ``X+`` with ``X-``."""
    tokens = tuple(tokens)
    present = set(tokens)
    mapping = {}
    for t in tokens:
        if t[-1:] not in ("+", "-"):
            raise InvalidGraphError([Violation(t, f"no implicit partner for {t}")])
        partner = t[:-1] + ("-" if t.endswith("+") else "+")
        if partner not in present:
            raise InvalidGraphError([Violation(t, f"no implicit partner for {t}")])
        mapping[t] = partner
    return Permutation(mapping, tokens)


class BrauerGraph:
    """Immutable Brauer graph ``(H, iota, sigma)``.

    ``check=False`` skips validation so that :func:`validate` can report on
    malformed triples.
    """

    __slots__ = ("halfedges", "iota", "sigma", "_cache")

    def __init__(self, halfedges: Sequence[str], iota: Permutation, sigma: Permutation, *, check: bool = True):
        self.halfedges = tuple(halfedges)
        self.iota = iota
        self.sigma = sigma
        self._cache: dict = {}
        if check:
            problems = validate(self)
            if problems:
                raise InvalidGraphError(problems)
            # Align both permutations on the declared half-edge order.
            if iota.ground != self.halfedges:
                self.iota = Permutation(iota.as_dict(), self.halfedges)
            if sigma.ground != self.halfedges:
                self.sigma = Permutation(sigma.as_dict(), self.halfedges)

    @classmethod
    def from_cycles(cls, sigma, halfedges: Sequence[str] | None = None, iota=None) -> "BrauerGraph":
        """Build from cycle notation.

        Without ``halfedges`` the half-edge set is the tokens of ``sigma``
        (and ``iota``) plus implicit ``+``/``-`` partners. Without ``iota`` the
        pairing is the implicit ``X+ <-> X-`` one.
        """
        sig = Permutation.from_cycles(sigma)
        if halfedges is None:
            toks = list(sig.ground)
            if iota is not None:
                toks += [t for t in Permutation.from_cycles(iota).ground if t not in set(toks)]
            else:
                for t in list(toks):
                    if t[-1:] in ("+", "-"):
                        partner = t[:-1] + ("-" if t.endswith("+") else "+")
                        if partner not in toks:
                            toks.append(partner)
            halfedges = sorted(toks)
        halfedges = tuple(halfedges)
        sig = Permutation.from_cycles(sigma, halfedges)
        io = implicit_pairing(halfedges) if iota is None else Permutation.from_cycles(iota, halfedges)
        return cls(halfedges, io, sig)

    def with_sigma(self, sigma: Permutation) -> "BrauerGraph":
        """Same half-edges and pairing, new orientation."""
        g = BrauerGraph.__new__(BrauerGraph)
        g.halfedges = self.halfedges
        g.iota = self.iota
        g.sigma = sigma if sigma.ground == self.halfedges else Permutation(sigma.as_dict(), self.halfedges)
        g._cache = {}
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, BrauerGraph):
            return NotImplemented
        return (set(self.halfedges) == set(other.halfedges)
                and self.iota == other.iota and self.sigma == other.sigma)

    def __hash__(self) -> int:
        return hash((frozenset(self.halfedges), self.iota, self.sigma))

    def __repr__(self) -> str:
        return f"BrauerGraph(sigma={str(self.sigma)!r}, halfedges={' '.join(self.halfedges)!r})"

    @property
    def face_permutation(self) -> Permutation:
        """``sigma * iota``: apply the pairing, then the orientation."""
        if "face" not in self._cache:
            self._cache["face"] = self.sigma * self.iota
        return self._cache["face"]


def validate(g: BrauerGraph) -> list[Violation]:
    """Every violated axiom, each naming the offending half-edge."""
    out: list[Violation] = []
    seen: set[str] = set()
    for t in g.halfedges:
        if not TOKEN_RE.match(t):
            out.append(Violation(t, f"malformed token {t!r}"))
        if t in seen:
            out.append(Violation(t, f"duplicate half-edge {t}"))
        seen.add(t)
    for name, p in (("pairing", g.iota), ("orientation", g.sigma)):
        for t in p.ground:
            if t not in seen:
                out.append(Violation(t, f"{name} acts on unknown half-edge {t}"))
        for t in g.halfedges:
            if t not in p._pos:
                out.append(Violation(t, f"{name} undefined on {t}"))
    for t in g.iota.fixed_points():
        out.append(Violation(t, f"pairing fixes {t}"))
    for t in g.iota.ground:
        if g.iota(g.iota(t)) != t:
            out.append(Violation(t, f"pairing is not an involution at {t}"))
    return out


def vertices(g: BrauerGraph) -> OrbitPartition:
    return g.sigma.cycles()


def edges(g: BrauerGraph) -> OrbitPartition:
    return g.iota.cycles()


def faces(g: BrauerGraph) -> OrbitPartition:
    return g.face_permutation.cycles()


def source_map(g: BrauerGraph) -> dict[str, tuple[str, ...]]:
    """Map each half-edge to the vertex (sigma-cycle) it leaves."""
    return {h: v for v in vertices(g) for h in v}


def euler_characteristic(g: BrauerGraph) -> int:
    return len(vertices(g)) - len(edges(g)) + len(faces(g))


def edge_name(g: BrauerGraph, h: str) -> str:
    """``"3"`` for the pair ``{3+, 3-}``; otherwise the least token of the pair."""
    a, b = sorted((h, g.iota(h)))
    if a[:-1] == b[:-1] and {a[-1], b[-1]} == {"+", "-"}:
        return a[:-1]
    return a


def edge_names(g: BrauerGraph) -> list[str]:
    return [edge_name(g, e[0]) for e in edges(g)]


def edge_halfedges(g: BrauerGraph, name: str) -> tuple[str, str]:
    """The two half-edges of the edge called ``name`` (or containing token ``name``)."""
    if name in g.iota._pos:
        a = name
    else:
        for cand in (name + "+", name + "-"):
            if cand in g.iota._pos and edge_name(g, cand) == name:
                a = cand
                break
        else:
            raise SubsetError(f"unknown edge {name}")
    return tuple(sorted((a, g.iota(a))))


def subset_from_edges(g: BrauerGraph, names: Iterable[str]) -> frozenset[str]:
    out: set[str] = set()
    for n in names:
        out.update(edge_halfedges(g, n))
    return frozenset(out)


def components(g: BrauerGraph) -> list[tuple[str, ...]]:
    """Connected components as sorted half-edge tuples, sorted by least member."""
    seen: set[str] = set()
    out = []
    for h in sorted(g.halfedges):
        if h in seen:
            continue
        comp = []
        todo = [h]
        seen.add(h)
        while todo:
            x = todo.pop()
            comp.append(x)
            for y in (g.sigma(x), g.iota(x)):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: BrauerGraph) -> bool:
    return len(components(g)) <= 1


@dataclass(frozen=True)
class BipartiteResult:
    """Outcome of :func:`is_bipartite`.

    ``coloring`` is ``C: H -> {0, 1}`` with ``C(sigma h) = C(h)`` and
    ``C(iota h) = 1 - C(h)``. ``odd_walk`` is a sequence of half-edges, each
    step leaving the vertex of ``h`` along its edge, closing up after an odd
    number of steps.
    """

    bipartite: bool
    coloring: Mapping[str, int] | None = None
    odd_walk: tuple[str, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: BrauerGraph) -> BipartiteResult:
    src = source_map(g)
    color: dict[tuple, int] = {}
    # parent[v] = half-edge by which v was reached (leaving the parent vertex)
    parent: dict[tuple, str | None] = {}
    for root in vertices(g):
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for h in v:
                w = src[g.iota(h)]
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = h
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteResult(False, odd_walk=_odd_walk(g, src, parent, v, h, w))
    coloring = {h: color[src[h]] for h in g.halfedges}
    return BipartiteResult(True, coloring=coloring)


def _odd_walk(g, src, parent, v, h, w) -> tuple[str, ...]:
    def path_to_root(x):
        steps = []
        while parent[x] is not None:
            steps.append(parent[x])
            x = src[parent[x]]
        return steps[::-1], x

    down_v, _ = path_to_root(v)
    down_w, _ = path_to_root(w)
    # drop the shared prefix of the two tree paths
    k = 0
    while k < min(len(down_v), len(down_w)) and down_v[k] == down_w[k]:
        k += 1
    up_w = [g.iota(x) for x in reversed(down_w[k:])]
    return tuple(down_v[k:] + [h] + up_w)


def _component_codes(g: BrauerGraph):
    if "codes" in g._cache:
        return g._cache["codes"]
    pos = g.sigma._pos
    sig = g.sigma.indices()
    io = g.iota.indices()
    out = []
    for comp in components(g):
        code, order = _accel.min_code(sig, io, [pos[h] for h in comp])
        out.append((code, tuple(g.halfedges[i] for i in order)))
    out.sort()
    g._cache["codes"] = out
    return out


def canonical_form(g: BrauerGraph) -> bytes:
    """Relabeling-invariant encoding; equal iff the graphs are isomorphic."""
    return b"|".join(",".join(map(str, code)).encode() for code, _ in _component_codes(g))


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    mapping: Mapping[str, str] | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def is_isomorphic(g1: BrauerGraph, g2: BrauerGraph) -> IsomorphismResult:
    """Find ``phi`` with ``phi iota1 phi^-1 = iota2`` and ``phi sigma1 phi^-1 = sigma2``."""
    if len(g1.halfedges) != len(g2.halfedges):
        return IsomorphismResult(False)
    c1, c2 = _component_codes(g1), _component_codes(g2)
    if [c for c, _ in c1] != [c for c, _ in c2]:
        return IsomorphismResult(False)
    phi = {}
    for (_, o1), (_, o2) in zip(c1, c2):
        phi.update(zip(o1, o2))
    return IsomorphismResult(True, phi)


def relabel(g: BrauerGraph, phi: Mapping[str, str]) -> BrauerGraph:
    """Transport ``g`` along the bijection ``phi``."""
    inv = {v: k for k, v in phi.items()}
    new = tuple(phi[h] for h in g.halfedges)
    io = Permutation({y: phi[g.iota(inv[y])] for y in new}, new)
    sg = Permutation({y: phi[g.sigma(inv[y])] for y in new}, new)
    return BrauerGraph(new, io, sg)
