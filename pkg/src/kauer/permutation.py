"""Finite permutations of half-edge tokens.

A :class:`Permutation` is a bijection of a fixed ground set of string tokens.
Products are read right to left: ``(p * q)(x) == p(q(x))``.

>>> s = Permutation.from_cycles("(1+ 2+ 3+ 3-)(1- 2-)")
>>> s("3-")
'1+'
>>> s.cycles()
(('1+', '2+', '3+', '3-'), ('1-', '2-'))
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from . import _accel

OrbitPartition = tuple  # tuple[tuple[str, ...], ...]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[str, ...]]:
    """Split ``"(a b)(c d e)"`` into ``[("a", "b"), ("c", "d", "e")]``."""
    stripped = text.strip()
    cycles = [tuple(m.group(1).split()) for m in _CYCLE_RE.finditer(stripped)]
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    return cycles


class Permutation:
    """Bijection of a finite ordered ground set of tokens."""

    __slots__ = ("_ground", "_pos", "_img", "_hash")

    def __init__(self, mapping: Mapping[str, str], ground: Sequence[str] | None = None):
        ground = tuple(mapping) if ground is None else tuple(ground)
        pos = {x: i for i, x in enumerate(ground)}
        if len(pos) != len(ground):
            raise ValueError("ground set has repeated tokens")
        if set(mapping) != set(pos):
            raise ValueError("mapping is not total on the ground set")
        img = tuple(pos[mapping[x]] if mapping[x] in pos else -1 for x in ground)
        if -1 in img or len(set(img)) != len(img):
            raise ValueError("mapping is not a bijection of the ground set")
        self._ground = ground
        self._pos = pos
        self._img = img
        self._hash = None

    @classmethod
    def _raw(cls, ground: tuple, pos: dict, img: tuple) -> "Permutation":
        p = object.__new__(cls)
        p._ground = ground
        p._pos = pos
        p._img = img
        p._hash = None
        return p

    @classmethod
    def identity(cls, ground: Iterable[str]) -> "Permutation":
        ground = tuple(ground)
        return cls({x: x for x in ground}, ground)

    @classmethod
    def from_cycles(cls, cycles, ground: Iterable[str] | None = None) -> "Permutation":
        """Build from cycle notation (string or sequence of sequences).

        Tokens of ``ground`` not mentioned are fixed points. Without
        ``ground``, the ground set is the mentioned tokens in reading order.
        """
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        mapping: dict[str, str] = {}
        order: list[str] = []
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if x in mapping:
                    raise ValueError(f"token {x} appears twice in cycle notation")
                mapping[x] = cyc[(i + 1) % len(cyc)]
                order.append(x)
        if ground is None:
            ground = order
        else:
            ground = tuple(ground)
            for x in ground:
                mapping.setdefault(x, x)
        return cls(mapping, ground)

    @classmethod
    def from_transpositions(cls, pairs: Iterable[tuple[str, str]], ground: Iterable[str]) -> "Permutation":
        """Product of transpositions, which must have pairwise disjoint support."""
        ground = tuple(ground)
        mapping = {x: x for x in ground}
        seen: set[str] = set()
        for a, b in pairs:
            if a == b or a in seen or b in seen:
                raise ValueError(f"transposition ({a} {b}) overlaps the others")
            seen.update((a, b))
            mapping[a], mapping[b] = b, a
        return cls(mapping, ground)

    # -- accessors -----------------------------------------------------------

    @property
    def ground(self) -> tuple[str, ...]:
        return self._ground

    def __call__(self, x: str) -> str:
        return self._ground[self._img[self._pos[x]]]

    def __len__(self) -> int:
        return len(self._ground)

    def as_dict(self) -> dict[str, str]:
        g = self._ground
        return {x: g[i] for x, i in zip(g, self._img)}

    def indices(self) -> tuple[int, ...]:
        """Images as ground-set indices."""
        return self._img

    def _aligned(self, other: "Permutation") -> tuple[int, ...]:
        if other._ground is self._ground or other._ground == self._ground:
            return other._img
        if other._pos.keys() != self._pos.keys():
            raise ValueError("permutations act on different ground sets")
        g, pos = other._ground, self._pos
        return tuple(pos[g[other._img[other._pos[x]]]] for x in self._ground)

    # -- algebra ---------------------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        return Permutation._raw(self._ground, self._pos, _accel.compose(self._img, self._aligned(other)))

    def inverse(self) -> "Permutation":
        return Permutation._raw(self._ground, self._pos, _accel.inverse(self._img))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Permutation._raw(self._ground, self._pos, tuple(range(len(self._img))))
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self, c: "Permutation") -> "Permutation":
        """Return ``c * self * c**-1``."""
        return c * self * c.inverse()

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def is_involution(self) -> bool:
        img = self._img
        return all(img[x] == i for i, x in enumerate(img))

    def fixed_points(self) -> list[str]:
        return [self._ground[i] for i, x in enumerate(self._img) if i == x]

    def support(self) -> frozenset[str]:
        return frozenset(self._ground[i] for i, x in enumerate(self._img) if i != x)

    def orbit(self, x: str) -> tuple[str, ...]:
        out = [x]
        y = self(x)
        while y != x:
            out.append(y)
            y = self(y)
        return tuple(out)

    def cycles(self) -> OrbitPartition:
        """All cycles, fixed points included; each starts at its least token,
        cycles sorted by least token."""
        g, img = self._ground, self._img
        seen = [False] * len(img)
        out = []
        for i in range(len(img)):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(g[j])
                j = img[j]
            k = cyc.index(min(cyc))
            out.append(tuple(cyc[k:] + cyc[:k]))
        out.sort(key=lambda c: c[0])
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        lab, k = _accel.orbit_labels(self._img)
        counts = [0] * k
        for x in lab:
            counts[x] += 1
        return tuple(sorted(counts))

    # -- dunder ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        if self._ground == other._ground:
            return self._img == other._img
        return self._pos.keys() == other._pos.keys() and self.as_dict() == other.as_dict()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.as_dict().items()))
        return self._hash

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(c) + ")" for c in cyc) or "()"

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({str(self)!r}, ground={self._ground!r})"


def orbits(p: Permutation) -> OrbitPartition:
    """Cycles of ``p`` in canonical order (see :meth:`Permutation.cycles`)."""
    return p.cycles()
