"""Derived-equivalence fingerprint and reachability under moves.

Two Brauer graphs (multiplicity one) with the same number of vertices and
edges, the same multiset of face perimeters and the same bipartiteness have
derived equivalent Brauer graph algebras. Moves preserve all four; this module
computes them, the explicit conjugator between the face permutations, the
transported bipartition, and a bounded search over move sequences.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import KauerError
from .graph import BrauerGraph, canonical_form, edge_halfedges, edge_names, edges, is_bipartite, vertices
from .moves import kauer_move, move_data, stable_subset
from .permutation import Permutation

DEFAULT_MAX_NODES = 100_000


@dataclass(frozen=True)
class InvariantReport:
    num_vertices: int
    num_edges: int
    perimeters: tuple[int, ...]
    bipartite: bool

    def lines(self) -> list[str]:
        return [
            f"vertices: {self.num_vertices}",
            f"edges: {self.num_edges}",
            f"faces: {len(self.perimeters)}",
            "perimeters: " + " ".join(map(str, self.perimeters)),
            f"bipartite: {str(self.bipartite).lower()}",
        ]


def invariants(g: BrauerGraph) -> InvariantReport:
    return InvariantReport(
        num_vertices=len(vertices(g)),
        num_edges=len(edges(g)),
        perimeters=g.face_permutation.cycle_type(),
        bipartite=is_bipartite(g).bipartite,
    )


def iota_sigma_commutes(g: BrauerGraph) -> bool:
    return g.iota * g.sigma == g.sigma * g.iota


def conjugator(g: BrauerGraph, hprime: Iterable[str]) -> Permutation:
    """``c = t * tau_cut`` with ``c (sigma iota) c^-1 = sigma' iota``.

    ``t`` agrees with ``(tau_cut sigma iota)^-1`` on ``hprime`` and is the
    identity elsewhere.
    """
    sub = stable_subset(g, hprime)
    data = move_data(g, sub)
    moved = data.tau_cut * g.sigma * data.tau_paste
    inv = (data.tau_cut * g.sigma * g.iota).inverse()
    t_map = {h: (inv(h) if h in sub else h) for h in g.halfedges}
    try:
        t = Permutation(t_map, g.halfedges)
    except ValueError as exc:
        raise KauerError("conjugator construction failed") from exc
    c = t * data.tau_cut
    if c * (g.sigma * g.iota) * c.inverse() != moved * g.iota:
        raise KauerError("conjugator construction failed")
    return c


def bipartite_transfer(g: BrauerGraph, hprime: Iterable[str], coloring: Mapping[str, int]) -> dict[str, int]:
    """Flip a bipartition witness on ``hprime``; the result is a witness for
    the moved graph."""
    sub = stable_subset(g, hprime)
    for h in g.halfedges:
        if coloring[h] not in (0, 1) or coloring[g.sigma(h)] != coloring[h] \
                or coloring[g.iota(h)] != 1 - coloring[h]:
            raise KauerError(f"coloring is not a bipartition witness at {h}")
    return {h: (1 - coloring[h] if h in sub else coloring[h]) for h in g.halfedges}


# -- bounded reachability ----------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    found: bool
    path: tuple[tuple[str, tuple[str, ...]], ...] = ()
    explored: int = 0
    budget_exhausted: bool = False

    def __bool__(self) -> bool:
        return self.found


def _move_options(g: BrauerGraph, kind: str):
    names = edge_names(g)
    if kind == "standard":
        for n in names:
            yield (n,)
    elif kind == "generalized":
        for k in range(1, len(names) + 1):
            yield from combinations(names, k)
    else:
        raise KauerError(f"unknown move kind {kind!r}")


def apply_move(g: BrauerGraph, edge_set: Iterable[str]) -> BrauerGraph:
    sub: set[str] = set()
    for n in edge_set:
        sub.update(edge_halfedges(g, n))
    return kauer_move(g, sub)


def _labeled_key(g: BrauerGraph) -> bytes:
    return str(g.sigma).encode()


def reach(source: BrauerGraph, target: BrauerGraph, max_depth: int, moves: str = "generalized",
          max_nodes: int = DEFAULT_MAX_NODES, up_to: str = "isomorphism") -> SearchResult:
    """Breadth-first search for ``target`` from ``source``.

    With ``up_to="isomorphism"`` nodes are deduplicated by canonical form and
    the target is matched up to relabeling. With ``up_to="labels"`` half-edges
    keep their names: nodes are orientations of the fixed ``(H, iota)`` and the
    target must be hit exactly. Move options are tried in lexicographic order
    of edge subsets, so the returned path is deterministic. ``explored`` counts
    distinct nodes seen.
    """
    if moves not in ("standard", "generalized"):
        raise KauerError(f"unknown move kind {moves!r}")
    if up_to == "isomorphism":
        key = canonical_form
    elif up_to == "labels":
        if set(source.halfedges) != set(target.halfedges) or source.iota != target.iota:
            raise KauerError("labeled search needs the same half-edges and pairing")
        key = _labeled_key
    else:
        raise KauerError(f"unknown identification {up_to!r}")
    goal = key(target)
    start = key(source)
    parent: dict[bytes, tuple[bytes, tuple[str, ...]] | None] = {start: None}
    if start == goal:
        return SearchResult(True, (), 1)
    frontier = deque([(source, start)])
    for _ in range(max_depth):
        nxt = deque()
        for g, gk in frontier:
            for option in _move_options(g, moves):
                h = apply_move(g, option)
                hk = key(h)
                if hk in parent:
                    continue
                parent[hk] = (gk, option)
                if hk == goal:
                    return SearchResult(True, _trace(parent, hk, moves), len(parent))
                if len(parent) >= max_nodes:
                    return SearchResult(False, (), len(parent), budget_exhausted=True)
                nxt.append((h, hk))
        frontier = nxt
        if not frontier:
            break
    return SearchResult(False, (), len(parent))


def _trace(parent, key, kind):
    steps = []
    while parent[key] is not None:
        key, option = parent[key]
        steps.append((kind, option))
    return tuple(reversed(steps))


def replay(source: BrauerGraph, path) -> BrauerGraph:
    g = source
    for _, option in path:
        g = apply_move(g, option)
    return g
