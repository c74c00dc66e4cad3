"""Integer-lattice geometry: points, translations, axis-aligned cubes, windows.

Points and translations are plain tuples of ints. Everything here is pure and
immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import comb, gcd
from typing import Iterable, Iterator, Sequence

Point = tuple[int, ...]
Translation = tuple[int, ...]

MAX_DIM = 6


class DimensionError(ValueError):
    """Raised when points of different dimensions are mixed."""


def as_point(coords: Iterable[int]) -> Point:
    p = tuple(int(c) for c in coords)
    if not 1 <= len(p) <= MAX_DIM:
        raise DimensionError(f"dimension must be in 1..{MAX_DIM}, got {len(p)}")
    return p


def check_dim(p: Sequence[int], n: int) -> None:
    if len(p) != n:
        raise DimensionError(f"expected a point of dimension {n}, got {tuple(p)!r}")


def translate(p: Point, t: Translation) -> Point:
    check_dim(t, len(p))
    return tuple(a + b for a, b in zip(p, t))


def compose(*ts: Translation) -> Translation:
    """Compose translations (componentwise sum)."""
    return tuple(sum(c) for c in zip(*ts))


def inverse(t: Translation) -> Translation:
    return tuple(-c for c in t)


def unit(n: int, axis: int, sign: int = 1) -> Translation:
    return tuple(sign if i == axis else 0 for i in range(n))


def is_simple_translation(t: Translation) -> bool:
    """True iff ``t`` is nonzero and not a proper integer multiple of another translation."""
    if not any(t):
        return False
    return reduce(gcd, (abs(c) for c in t)) == 1


@dataclass(frozen=True, order=True)
class Cube:
    """Axis-aligned k-cube: ``anchor + sum(e_i * unit(axes[i]))`` for ``e_i`` in {0, 1}.

    The anchor is the componentwise-minimal corner and ``axes`` is strictly
    increasing, so two cubes are equal iff they have the same point set.
    """

    anchor: Point
    axes: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        n = len(self.anchor)
        if any(b <= a for a, b in zip(self.axes, self.axes[1:])):
            raise ValueError(f"axes must be strictly increasing: {self.axes!r}")
        if self.axes and not (0 <= self.axes[0] and self.axes[-1] < n):
            raise ValueError(f"axes {self.axes!r} out of range for dimension {n}")

    @property
    def n(self) -> int:
        return len(self.anchor)

    @property
    def k(self) -> int:
        return len(self.axes)

    def points(self) -> frozenset[Point]:
        return cube_points(self)

    def translated(self, t: Translation) -> "Cube":
        return Cube(translate(self.anchor, t), self.axes)


@lru_cache(maxsize=None)
def _corner_offsets(n: int, axes: tuple[int, ...]) -> tuple[Translation, ...]:
    out = []
    for bits in itertools.product((0, 1), repeat=len(axes)):
        off = [0] * n
        for ax, b in zip(axes, bits):
            off[ax] = b
        out.append(tuple(off))
    return tuple(out)


def cube_points(c: Cube) -> frozenset[Point]:
    return frozenset(translate(c.anchor, off) for off in _corner_offsets(c.n, c.axes))


def subcubes(c: Cube, j: int) -> list[Cube]:
    """All j-dimensional faces of ``c``: C(k, j) * 2**(k - j) cubes."""
    if not 0 <= j <= c.k:
        raise ValueError(f"subcube dimension {j} out of range 0..{c.k}")
    out = []
    for free in itertools.combinations(c.axes, j):
        fixed = [ax for ax in c.axes if ax not in free]
        for off in _corner_offsets(c.n, tuple(fixed)):
            out.append(Cube(translate(c.anchor, off), free))
    return out


@lru_cache(maxsize=None)
def _decomposition_template(
    n: int, axes: tuple[int, ...]
) -> tuple[tuple[Translation, tuple[int, ...], Translation, Translation], ...]:
    # (anchor offset of C*, axes of C*, tau_1, tau_2) relative to the cube anchor
    out = []
    for a, b in itertools.combinations(axes, 2):
        rest = tuple(ax for ax in axes if ax not in (a, b))
        for ea, eb in itertools.product((0, 1), repeat=2):
            off = tuple(ea if i == a else eb if i == b else 0 for i in range(n))
            t1 = unit(n, a, 1 if ea == 0 else -1)
            t2 = unit(n, b, 1 if eb == 0 else -1)
            out.append((off, rest, t1, t2))
    return tuple(out)


def cube_decompositions(c: Cube) -> list[tuple[Cube, Translation, Translation]]:
    """Every split ``C = C* | t1(C*) | t2(C*) | t1 t2(C*)`` with C* a (k-2)-face.

    ``t1`` and ``t2`` are unit translations pointing from C* into the cube.
    """
    if c.k < 2:
        raise ValueError(f"decomposition needs a cube of dimension >= 2, got {c.k}")
    return [
        (Cube(translate(c.anchor, off), rest), t1, t2)
        for off, rest, t1, t2 in _decomposition_template(c.n, c.axes)
    ]


def count_k_faces(n: int, k: int) -> int:
    """Number of k-faces of an n-cube."""
    if not 0 <= k <= n <= MAX_DIM:
        raise ValueError(f"need 0 <= k <= n <= {MAX_DIM}, got n={n}, k={k}")
    return comb(n, k) * 2 ** (n - k)


@dataclass(frozen=True)
class Window:
    """Closed integer box ``lo <= p <= hi`` (componentwise)."""

    lo: Point
    hi: Point

    def __post_init__(self) -> None:
        if len(self.lo) != len(self.hi):
            raise DimensionError("window corners differ in dimension")
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise ValueError(f"empty window {self.lo!r}..{self.hi!r}")

    @classmethod
    def around(cls, p: Point, radius: int) -> "Window":
        return cls(tuple(c - radius for c in p), tuple(c + radius for c in p))

    @classmethod
    def bounding(cls, points: Iterable[Point]) -> "Window":
        pts = list(points)
        if not pts:
            raise ValueError("bounding box of an empty set is undefined")
        return cls(tuple(map(min, zip(*pts))), tuple(map(max, zip(*pts))))

    @property
    def n(self) -> int:
        return len(self.lo)

    def contains(self, p: Point) -> bool:
        return all(a <= c <= b for a, c, b in zip(self.lo, p, self.hi))

    def contains_window(self, other: "Window") -> bool:
        return self.contains(other.lo) and self.contains(other.hi)

    def dilate(self, r: int) -> "Window":
        return Window(tuple(c - r for c in self.lo), tuple(c + r for c in self.hi))

    def on_shell(self, p: Point) -> bool:
        return any(c == a or c == b for a, c, b in zip(self.lo, p, self.hi))

    def points(self) -> Iterator[Point]:
        return itertools.product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))

    def size(self) -> int:
        out = 1
        for a, b in zip(self.lo, self.hi):
            out *= b - a + 1
        return out


def enumerate_cubes_in_window(w: Window, k: int) -> Iterator[Cube]:
    """Every k-cube lying entirely inside ``w``, each once, in sorted order."""
    if not 0 <= k <= w.n:
        raise ValueError(f"cube dimension {k} out of range 0..{w.n}")
    for axes in itertools.combinations(range(w.n), k):
        ranges = [
            range(lo, hi if i in axes else hi + 1)
            for i, (lo, hi) in enumerate(zip(w.lo, w.hi))
        ]
        for anchor in itertools.product(*ranges):
            yield Cube(anchor, axes)


def cubes_meeting(points: Iterable[Point], k: int, n: int) -> list[Cube]:
    """Every k-cube in Z^n containing at least one of ``points``, sorted."""
    found: set[Cube] = set()
    pts = list(points)
    for axes in itertools.combinations(range(n), k):
        offsets = _corner_offsets(n, axes)
        for p in pts:
            for off in offsets:
                found.add(Cube(tuple(a - b for a, b in zip(p, off)), axes))
    return sorted(found)
