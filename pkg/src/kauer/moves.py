"""Generalized Kauer moves, plain and graded.

For an iota-stable subset ``H'`` of half-edges, a *sector* ``(h, r)`` is a
run ``h, sigma h, ..., sigma^r h`` inside ``H'`` with ``sigma^(r+1) h``
outside; it is *maximal* when ``sigma^-1 h`` is outside too. The move
rewrites the orientation as ``tau_cut * sigma * tau_paste`` with

    tau_cut   = prod (h  sigma^(r+1) h)
    tau_paste = prod (sigma^r h  iota sigma^(r+1) h)

over the maximal sectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import GradingError, SectorError, SubsetError
from .graph import BrauerGraph, edge_halfedges, vertices
from .permutation import Permutation

INFINITE = math.inf


class Sector(NamedTuple):
    h: str
    r: int

    def __str__(self) -> str:
        return f"({self.h},{self.r})"


def stable_subset(g: BrauerGraph, hprime: Iterable[str]) -> frozenset[str]:
    """Check that ``hprime`` is a set of known half-edges closed under iota."""
    sub = frozenset(hprime)
    known = g.iota._pos
    for h in sorted(sub):
        if h not in known:
            raise SubsetError(f"unknown half-edge {h}")
        if g.iota(h) not in sub:
            raise SubsetError(f"subset must be stable under pairing ({h} without {g.iota(h)})")
    return sub


def run_length(g: BrauerGraph, hprime: Iterable[str], h: str) -> int | float:
    """Length ``r`` of the sector starting at ``h``, or ``INFINITE`` when the
    whole sigma-orbit of ``h`` lies in ``hprime``."""
    sub = frozenset(hprime)
    if h not in sub:
        raise SubsetError(f"{h} not in subset")
    x = g.sigma(h)
    r = 0
    while x in sub:
        if x == h:
            return INFINITE
        x = g.sigma(x)
        r += 1
    return r


def sectors(g: BrauerGraph, hprime: Iterable[str]) -> list[Sector]:
    sub = stable_subset(g, hprime)
    out = []
    for h in sorted(sub):
        r = run_length(g, sub, h)
        if r != INFINITE:
            out.append(Sector(h, r))
    return out


def maximal_sectors(g: BrauerGraph, hprime: Iterable[str]) -> list[Sector]:
    sub = stable_subset(g, hprime)
    return [s for s in sectors(g, sub) if g.sigma.inverse()(s.h) not in sub]


def is_sector(g: BrauerGraph, hprime: Iterable[str], s: Sector) -> bool:
    sub = frozenset(hprime)
    return s.h in sub and run_length(g, sub, s.h) == s.r


@dataclass(frozen=True)
class MoveData:
    tau_cut: Permutation
    tau_paste: Permutation
    maximal_sectors: tuple[Sector, ...]


def _cut_pair(g: BrauerGraph, s: Sector) -> tuple[str, str]:
    return s.h, (g.sigma ** (s.r + 1))(s.h)


def _paste_pair(g: BrauerGraph, s: Sector) -> tuple[str, str]:
    return (g.sigma ** s.r)(s.h), g.iota((g.sigma ** (s.r + 1))(s.h))


def move_data(g: BrauerGraph, hprime: Iterable[str]) -> MoveData:
    secs = maximal_sectors(g, hprime)
    cut = Permutation.from_transpositions([_cut_pair(g, s) for s in secs], g.halfedges)
    paste = Permutation.from_transpositions([_paste_pair(g, s) for s in secs], g.halfedges)
    return MoveData(cut, paste, tuple(secs))


def kauer_move(g: BrauerGraph, hprime: Iterable[str]) -> BrauerGraph:
    """Generalized Kauer move: ``(H, iota, tau_cut * sigma * tau_paste)``."""
    data = move_data(g, hprime)
    return g.with_sigma(data.tau_cut * g.sigma * data.tau_paste)


def standard_kauer_move(g: BrauerGraph, edge: str) -> BrauerGraph:
    """Classical Kauer move at one edge (by name such as ``"3"`` or a token)."""
    return kauer_move(g, edge_halfedges(g, edge))


def kauer_move_edges(g: BrauerGraph, names: Iterable[str]) -> BrauerGraph:
    sub: set[str] = set()
    for n in names:
        sub.update(edge_halfedges(g, n))
    return kauer_move(g, sub)


# -- gradings -------------------------------------------------------------------


def homogeneity_defects(g: BrauerGraph, d: Mapping[str, int]) -> list[tuple[tuple[str, ...], int]]:
    """Vertices whose degree sum is not 1, with that sum."""
    return [(v, s) for v in vertices(g) if (s := sum(d[h] for h in v)) != 1]


def is_one_homogeneous(g: BrauerGraph, d: Mapping[str, int]) -> bool:
    return set(d) == set(g.halfedges) and not homogeneity_defects(g, d)


class GradedBrauerGraph:
    """A Brauer graph with a 1-homogeneous integer grading of its half-edges."""

    __slots__ = ("graph", "grading")

    def __init__(self, graph: BrauerGraph, grading: Mapping[str, int]):
        missing = set(graph.halfedges) - set(grading)
        extra = set(grading) - set(graph.halfedges)
        if missing or extra:
            raise GradingError(f"grading domain mismatch (missing {sorted(missing)}, unknown {sorted(extra)})")
        if not all(isinstance(x, int) for x in grading.values()):
            raise GradingError("grading values must be integers")
        bad = homogeneity_defects(graph, grading)
        if bad:
            v, s = bad[0]
            raise GradingError(f"grading not 1-homogeneous: vertex ({' '.join(v)}) has degree {s}")
        self.graph = graph
        self.grading = MappingProxyType({h: grading[h] for h in graph.halfedges})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedBrauerGraph):
            return NotImplemented
        return self.graph == other.graph and dict(self.grading) == dict(other.grading)

    def __hash__(self) -> int:
        return hash((self.graph, frozenset(self.grading.items())))

    def __repr__(self) -> str:
        return f"GradedBrauerGraph({self.graph!r}, {dict(self.grading)!r})"


def graded_sector_move(gg: GradedBrauerGraph, sector: Sector, hprime: Iterable[str]) -> GradedBrauerGraph:
    """Graded move of one sector ``(h, r)``.

    The orientation becomes ``(h s^(r+1)h) s (s^r h  i s^(r+1)h)``; the degrees of
    ``i s^(r+1) h``, ``s^r h`` and ``s^-1 h`` are updated, with a separate rule
    when ``i s^(r+1) h == s^-1 h``.
    """
    g, d = gg.graph, gg.grading
    sub = stable_subset(g, hprime)
    sector = Sector(*sector)
    if not is_sector(g, sub, sector):
        raise SectorError(f"{sector} is not a sector of the subset")
    h, r = sector
    sig = g.sigma
    run = [(sig ** i)(h) for i in range(r + 1)]
    exit_ = sig(run[-1])
    back = sig.inverse()(h)
    across = g.iota(exit_)
    last = run[-1]

    run_sum = sum(d[x] for x in run)
    new = dict(d)
    if across != back:
        new[across] = -run_sum
        new[last] = d[across] + d[last]
        new[back] = d[back] + run_sum
    else:
        new[across] = -run_sum  # same half-edge as back
        new[last] = d[back] + run_sum + d[last]

    tau_cut = Permutation.from_transpositions([(h, exit_)], g.halfedges)
    tau_paste = Permutation.from_transpositions([(last, across)], g.halfedges)
    moved = g.with_sigma(tau_cut * sig * tau_paste)
    return GradedBrauerGraph(moved, new)


def graded_multi_move(gg: GradedBrauerGraph, hprime: Iterable[str],
                      order: Sequence[Sector] | None = None) -> GradedBrauerGraph:
    """Move every maximal sector of ``hprime`` in turn.

    The default order is lexicographic; any order of the maximal sectors gives
    the same result.
    """
    sub = stable_subset(gg.graph, hprime)
    secs = maximal_sectors(gg.graph, sub)
    if order is not None:
        order = [Sector(*s) for s in order]
        if sorted(order) != sorted(secs):
            raise SectorError("order must list exactly the maximal sectors")
        secs = order
    out = gg
    for s in secs:
        out = graded_sector_move(out, s, sub)
    return out
