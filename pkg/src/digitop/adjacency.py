"""Adjacency relations on Z^n and connected components of finite point sets.

Four variants are supported:

* ``proto``     -- the 2n axis neighbours (same as ``cubical:n-1``)
* ``omega``     -- the full 3^n - 1 box neighbourhood (same as ``cubical:0``)
* ``cubical:k`` -- gridcubes sharing a k-face:
  ``max|p_i - q_i| == 1`` and ``1 <= sum|p_i - q_i| <= n - k``
* ``khalimsky`` -- the graph of the Khalimsky product topology, where
  ``q`` is adjacent to ``p`` iff they are ``max``-distance 1 apart and
  comparable under the specialisation order.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Collection, Iterable, Optional

from .lattice import DimensionError, MAX_DIM, Point, Window, check_dim

PROTO = "proto"
OMEGA = "omega"
CUBICAL = "cubical"
KHALIMSKY = "khalimsky"


@dataclass(frozen=True)
class AdjacencySpec:
    kind: str
    n: int
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {self.n}")
        if self.kind == CUBICAL:
            if self.k is None or not 0 <= self.k <= self.n - 1:
                raise ValueError(f"cubical:k needs 0 <= k <= {self.n - 1}, got {self.k}")
        elif self.kind in (PROTO, OMEGA, KHALIMSKY):
            if self.k is not None:
                raise ValueError(f"{self.kind} takes no parameter")
        else:
            raise ValueError(f"unknown adjacency kind {self.kind!r}")

    @classmethod
    def proto(cls, n: int) -> "AdjacencySpec":
        return cls(PROTO, n)

    @classmethod
    def omega(cls, n: int) -> "AdjacencySpec":
        return cls(OMEGA, n)

    @classmethod
    def cubical(cls, n: int, k: int) -> "AdjacencySpec":
        return cls(CUBICAL, n, k)

    @classmethod
    def khalimsky(cls, n: int) -> "AdjacencySpec":
        return cls(KHALIMSKY, n)

    @classmethod
    def parse(cls, text: str, n: int) -> "AdjacencySpec":
        """Parse ``proto``, ``omega``, ``cubical:<k>`` or ``khalimsky``."""
        name, sep, arg = text.strip().partition(":")
        if name == CUBICAL and sep:
            try:
                k = int(arg)
            except ValueError:
                raise ValueError(f"bad cubical parameter in {text!r}") from None
            return cls(CUBICAL, n, k)
        if name in (PROTO, OMEGA, KHALIMSKY) and not sep:
            return cls(name, n)
        raise ValueError(f"malformed adjacency spec {text!r}")

    def __str__(self) -> str:
        return f"cubical:{self.k}" if self.kind == CUBICAL else self.kind

    @property
    def is_cubical(self) -> bool:
        """True for proto, omega and cubical:k (the translation-invariant family)."""
        return self.kind != KHALIMSKY

    @property
    def face_dim(self) -> Optional[int]:
        """The k of the equivalent ``cubical:k``; None for Khalimsky."""
        if self.kind == PROTO:
            return self.n - 1
        if self.kind == OMEGA:
            return 0
        return self.k

    def canonical(self) -> "AdjacencySpec":
        """Proto and omega rewritten as their cubical equivalents."""
        if self.kind in (PROTO, OMEGA):
            return AdjacencySpec.cubical(self.n, self.face_dim)
        return self


def khalimsky_below(p: Point, q: Point) -> bool:
    """Specialisation order: ``p`` lies in the minimal open neighbourhood of ``q``.

    Coordinatewise, ``p_i == q_i`` or ``q_i`` is odd and ``|p_i - q_i| == 1``.
    """
    check_dim(q, len(p))
    return all(a == b or (b & 1 and abs(a - b) == 1) for a, b in zip(p, q))


@lru_cache(maxsize=None)
def _cubical_offsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        d
        for d in itertools.product((-1, 0, 1), repeat=n)
        if 1 <= sum(map(abs, d)) <= n - k
    )


@lru_cache(maxsize=None)
def _khalimsky_offsets(parity: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    n = len(parity)
    origin = parity
    out = []
    for d in itertools.product((-1, 0, 1), repeat=n):
        if not any(d):
            continue
        q = tuple(a + b for a, b in zip(origin, d))
        if khalimsky_below(q, origin) or khalimsky_below(origin, q):
            out.append(d)
    return tuple(out)


def _offsets(a: AdjacencySpec, p: Point) -> tuple[tuple[int, ...], ...]:
    if a.kind == KHALIMSKY:
        return _khalimsky_offsets(tuple(c & 1 for c in p))
    return _cubical_offsets(a.n, a.face_dim)


def neighbors(a: AdjacencySpec, p: Point) -> frozenset[Point]:
    check_dim(p, a.n)
    return frozenset(tuple(x + d for x, d in zip(p, off)) for off in _offsets(a, p))


def neighbor_count(a: AdjacencySpec) -> int:
    """Closed-form size of a cubical neighbourhood: sum_{i=k}^{n-1} C(n,i) 2^(n-i)."""
    if not a.is_cubical:
        raise NotImplementedError("no closed-form neighbour count for khalimsky")
    n, k = a.n, a.face_dim
    return sum(comb(n, i) * 2 ** (n - i) for i in range(k, n))


def are_adjacent(a: AdjacencySpec, p: Point, q: Point) -> bool:
    check_dim(p, a.n)
    check_dim(q, a.n)
    diff = [abs(x - y) for x, y in zip(p, q)]
    if max(diff) != 1:
        return False
    if a.kind == KHALIMSKY:
        return khalimsky_below(p, q) or khalimsky_below(q, p)
    return sum(diff) <= a.n - a.face_dim


@dataclass(frozen=True)
class ComponentPartition:
    """Connected blocks ordered by their smallest point.

    ``unbounded`` indexes the block that reaches infinity, when known.
    """

    blocks: tuple[frozenset[Point], ...]
    unbounded: Optional[int] = None
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        index = {p: i for i, b in enumerate(self.blocks) for p in b}
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, p: Point) -> Optional[int]:
        return self._index.get(p)


def _search(a: AdjacencySpec, universe: Collection[Point]) -> list[frozenset[Point]]:
    seen: set[Point] = set()
    blocks = []
    for start in sorted(universe):
        if start in seen:
            continue
        seen.add(start)
        block = [start]
        queue = deque([start])
        while queue:
            p = queue.popleft()
            for q in neighbors(a, p):
                if q in universe and q not in seen:
                    seen.add(q)
                    block.append(q)
                    queue.append(q)
        blocks.append(frozenset(block))
    return blocks


def components(a: AdjacencySpec, s: Iterable[Point]) -> ComponentPartition:
    pts = set(s)
    for p in pts:
        check_dim(p, a.n)
    return ComponentPartition(tuple(_search(a, pts)))


def is_connected(a: AdjacencySpec, s: Iterable[Point]) -> bool:
    """Nonempty and a single component."""
    return len(components(a, s)) == 1


def complement_components(
    a: AdjacencySpec, m: Iterable[Point], w: Optional[Window] = None
) -> ComponentPartition:
    """Components of Z^n minus ``m``, computed inside ``w`` dilated by 2.

    ``w`` defaults to the bounding box of ``m``. The outer shell of the dilated
    box misses ``m`` and is proto-connected, so every block touching it is part
    of the single unbounded component and the result is exact.
    """
    if a.n < 2:
        raise ValueError("complement components need n >= 2")
    ms = set(m)
    for p in ms:
        check_dim(p, a.n)
    if w is None:
        w = Window.bounding(ms) if ms else Window.around((0,) * a.n, 0)
    elif w.n != a.n:
        raise DimensionError("window dimension differs from adjacency dimension")
    outside = [p for p in ms if not w.contains(p)]
    if outside:
        raise ValueError(f"point {min(outside)!r} lies outside the window")
    region = w.dilate(2)
    universe = {p for p in region.points() if p not in ms}
    blocks = _search(a, universe)
    unbounded = [i for i, b in enumerate(blocks) if any(region.on_shell(p) for p in b)]
    if len(unbounded) != 1:
        raise AssertionError("shell of the dilated window split into several blocks")
    return ComponentPartition(tuple(blocks), unbounded[0])


def complement_labeller(
    a: AdjacencySpec, m: Iterable[Point], w: Optional[Window] = None
):
    """Return ``label(p)`` giving the complement-component index of ``p``.

    Points beyond the dilated window get the unbounded block's index; points
    of ``m`` get None.
    """
    ms = frozenset(m)
    part = complement_components(a, ms, w)

    def label(p: Point) -> Optional[int]:
        if p in ms:
            return None
        i = part.block_of(p)
        return part.unbounded if i is None else i

    return part, label
