"""Finite Alexandrov (T0) spaces given by their minimal open neighbourhoods."""

from __future__ import annotations

import itertools
from collections import deque
from typing import Hashable, Iterable, Mapping, Optional

from .lattice import Point

Element = Hashable


class FiniteAlexandrovSpace:
    """A finite T0 Alexandrov space.

    ``min_nbhd[p]`` is the smallest open set containing ``p``. Subspaces share a
    dimension cache with the space they came from, keyed by their point set.
    """

    def __init__(
        self,
        min_nbhd: Mapping[Element, Iterable[Element]],
        *,
        check: bool = True,
        _cache: Optional[dict] = None,
    ) -> None:
        self.min_nbhd: dict[Element, frozenset] = {
            p: frozenset(u) for p, u in min_nbhd.items()
        }
        self.points = frozenset(self.min_nbhd)
        closure: dict[Element, set] = {p: set() for p in self.points}
        for p, u in self.min_nbhd.items():
            for q in u:
                if q not in closure:
                    raise ValueError(f"neighbourhood of {p!r} leaves the space at {q!r}")
                closure[q].add(p)
        self._closure = {p: frozenset(c) for p, c in closure.items()}
        self._dim_cache = {} if _cache is None else _cache
        if check:
            self._check_axioms()

    def _check_axioms(self) -> None:
        seen: dict[frozenset, Element] = {}
        for p, u in self.min_nbhd.items():
            if p not in u:
                raise ValueError(f"{p!r} is missing from its own neighbourhood")
            for q in u:
                if not self.min_nbhd[q] <= u:
                    raise ValueError(f"neighbourhoods of {p!r} and {q!r} are not nested")
            if u in seen:
                raise ValueError(f"{p!r} and {seen[u]!r} are topologically indistinguishable")
            seen[u] = p

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: Element) -> bool:
        return p in self.points

    def _require(self, p: Element) -> None:
        if p not in self.points:
            raise KeyError(f"{p!r} is not a point of the space")

    def closure_of(self, p: Element) -> frozenset:
        """Smallest closed set containing ``p``: all q with p in U(q)."""
        self._require(p)
        return self._closure[p]

    def induced_adjacency(self, p: Element) -> frozenset:
        """(U(p) | C(p)) - {p}."""
        self._require(p)
        return (self.min_nbhd[p] | self._closure[p]) - {p}

    def u_closure(self, m: Iterable[Element]) -> frozenset:
        return frozenset().union(*(self.min_nbhd[q] for q in m))

    def c_closure(self, m: Iterable[Element]) -> frozenset:
        return frozenset().union(*(self._closure[q] for q in m))

    def subspace(self, subset: Iterable[Element]) -> "FiniteAlexandrovSpace":
        s = frozenset(subset)
        for p in s:
            self._require(p)
        return FiniteAlexandrovSpace(
            {p: self.min_nbhd[p] & s for p in s}, check=False, _cache=self._dim_cache
        )

    def point_dimension(self, p: Element) -> int:
        self._require(p)
        rest = self.min_nbhd[p] - {p}
        if not rest:
            return 0
        return 1 + self.subspace(rest).space_dimension()

    def space_dimension(self) -> int:
        """Largest point dimension; -1 for the empty space."""
        key = self.points
        if key not in self._dim_cache:
            self._dim_cache[key] = max(
                (self.point_dimension(p) for p in self.points), default=-1
            )
        return self._dim_cache[key]

    def is_connected(self) -> bool:
        """Nonempty and connected; topological and adjacency-graph connectivity agree."""
        if not self.points:
            return False
        start = min(self.points, key=repr)
        seen = {start}
        queue = deque([start])
        while queue:
            p = queue.popleft()
            for q in self.induced_adjacency(p):
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return len(seen) == len(self.points)

    def is_k_surface(self, k: int) -> bool:
        if k < 0:
            raise ValueError("surface dimension must be >= 0")
        if k == 0:
            return len(self.points) == 2 and not self.is_connected()
        if not self.is_connected():
            return False
        return all(
            self.subspace(self.induced_adjacency(p)).is_k_surface(k - 1)
            for p in self.points
        )


def khalimsky_interval(x: int) -> tuple[int, ...]:
    """Minimal open neighbourhood of ``x`` in the Khalimsky line."""
    return (x,) if x % 2 == 0 else (x - 1, x, x + 1)


def khalimsky_space_on(points: Iterable[Point]) -> FiniteAlexandrovSpace:
    """Subspace of Khalimsky n-space on a finite set of points."""
    pts = frozenset(tuple(p) for p in points)
    if len({len(p) for p in pts}) > 1:
        raise ValueError("points of mixed dimension")
    nbhd = {
        p: [q for q in itertools.product(*map(khalimsky_interval, p)) if q in pts]
        for p in pts
    }
    return FiniteAlexandrovSpace(nbhd)
