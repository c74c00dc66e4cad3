"""Digital (n-1)-manifolds, double points and good pairs of adjacencies.

Every check is exhaustive over a finite window and returns a verdict that
carries a concrete witness when the property fails.

Convention for pairs: in ``(alpha, beta)`` the foreground set ``M`` uses
``alpha`` and its complement uses ``beta``. Testing whether a pair is good
means testing ``M = beta(r)`` for reference points ``r``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .adjacency import (
    AdjacencySpec,
    ComponentPartition,
    complement_components,
    complement_labeller,
    components,
    neighbors,
)
from .lattice import (
    Cube,
    DimensionError,
    Point,
    Translation,
    Window,
    check_dim,
    cube_decompositions,
    cubes_meeting,
    is_simple_translation,
)

AXIOMS = {
    0: "alpha-connected",
    1: "cube connectivity",
    2: "two complement components",
    3: "component adjacency",
    4: "separation property",
}


@dataclass(frozen=True)
class AdjacencyPair:
    alpha: AdjacencySpec
    beta: AdjacencySpec

    def __post_init__(self) -> None:
        if self.alpha.n != self.beta.n:
            raise DimensionError("alpha and beta live in different dimensions")

    @classmethod
    def parse(cls, alpha: str, beta: str, n: int) -> "AdjacencyPair":
        return cls(AdjacencySpec.parse(alpha, n), AdjacencySpec.parse(beta, n))

    @classmethod
    def cubical(cls, n: int, l: int, k: int) -> "AdjacencyPair":
        return cls(AdjacencySpec.cubical(n, l), AdjacencySpec.cubical(n, k))

    @property
    def n(self) -> int:
        return self.alpha.n

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta})"


# -- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class SeparationWitness:
    cube: Cube
    subcube: Cube
    tau1: Translation
    tau2: Translation
    component: frozenset
    # points x of the subcube with x+t1+t2 in the component but x+t1 or x+t2 not
    offending: frozenset


@dataclass(frozen=True)
class SeparationVerdict:
    holds: bool
    witness: Optional[SeparationWitness] = None


@dataclass(frozen=True)
class CountWitness:
    """A set that should have had a different number of components."""

    points: frozenset
    count: int
    cube: Optional[Cube] = None
    point: Optional[Point] = None


@dataclass(frozen=True)
class AdjacencyWitness:
    """``q`` (an alpha-neighbour of ``p`` in M) misses block ``block`` of p's complement."""

    p: Point
    q: Point
    block: frozenset


Witness = Union[CountWitness, AdjacencyWitness, SeparationWitness]


@dataclass(frozen=True)
class ManifoldVerdict:
    holds: bool
    failed_axiom: Optional[int] = None
    witness: Optional[Witness] = None

    @property
    def reason(self) -> str:
        if self.holds:
            return "ok"
        return f"axiom {self.failed_axiom} ({AXIOMS[self.failed_axiom]}) fails"


@dataclass(frozen=True, order=True)
class DoublePoint:
    """``p`` in beta(z) with ``q = p + t`` and ``z = r + t`` crossing inside a square."""

    p: Point
    q: Point
    r: Point
    t: Translation


@dataclass(frozen=True)
class GoodPairVerdict:
    holds: bool
    pair: AdjacencyPair
    references: tuple = ()
    failed_reference: Optional[Point] = None
    manifold: Optional[ManifoldVerdict] = None
    double_points: tuple = ()


class ComponentCountError(ValueError):
    def __init__(self, point: Point, blocks: ComponentPartition) -> None:
        self.point = point
        self.blocks = blocks
        self.count = len(blocks)
        super().__init__(
            f"omega({point}) minus M has {self.count} components, expected 2"
        )


# -- helpers -----------------------------------------------------------------


def _points(m: Iterable[Point], n: int) -> frozenset:
    ms = frozenset(tuple(p) for p in m)
    for p in ms:
        check_dim(p, n)
    return ms


def _window(ms: frozenset, n: int, w: Optional[Window]) -> Optional[Window]:
    """Check (or default) the working window; None when M is empty."""
    if not ms:
        return w
    box = Window.bounding(ms)
    if w is None:
        return box.dilate(2)
    if w.n != n:
        raise DimensionError("window dimension differs from the pair's dimension")
    if not all(w.contains(p) for p in ms):
        raise ValueError("M is not contained in the window")
    # every cube meeting M lies in the box dilated by 1
    if not w.contains_window(box.dilate(1)):
        raise ValueError("window too small: needs the bounding box of M dilated by 1")
    return w


def _shift(points: Iterable[Point], t: Translation) -> list[Point]:
    return [tuple(a + b for a, b in zip(p, t)) for p in points]


def omega(p: Point) -> frozenset:
    return neighbors(AdjacencySpec.omega(len(p)), p) | {p}


# -- separation property -----------------------------------------------------


def _cube_violation(cube, ms, alpha, label) -> Optional[SeparationWitness]:
    cm = cube.points() & ms
    if not cm:
        return None
    splits = [(cs, sorted(cs.points()), t1, t2) for cs, t1, t2 in cube_decompositions(cube)]
    for comp in components(alpha, cm).blocks:
        sizes = [sum(1 for x in pts if x in comp) for _, pts, _, _ in splits]
        best = max(sizes)
        for (cs, pts, t1, t2), size in zip(splits, sizes):
            if size != best:
                continue
            out1 = [x for x in _shift(pts, t1) if x not in ms]
            out2 = [x for x in _shift(pts, t2) if x not in ms]
            if not out1 or not out2:
                continue
            if len({label(x) for x in out1 + out2}) != 1:
                continue
            both = _shift(pts, tuple(a + b for a, b in zip(t1, t2)))
            via1 = _shift(pts, t1)
            via2 = _shift(pts, t2)
            offending = frozenset(
                x
                for x, d, a, b in zip(pts, both, via1, via2)
                if d in comp and not (a in comp and b in comp)
            )
            if offending:
                return SeparationWitness(cube, cs, t1, t2, comp, offending)
    return None


def check_separation_property(
    m: Iterable[Point], pair: AdjacencyPair, w: Optional[Window] = None
) -> SeparationVerdict:
    """Check that M never splits one background component inside a cube.

    For every k-cube C (2 <= k <= n) meeting M, every alpha-component M' of
    C & M and every (k-2)-face C* of C whose overlap with M' has maximal size:
    if t1(C*) - M and t2(C*) - M are nonempty and lie in one beta-component of
    the complement, points of C* reaching M' diagonally must also reach it
    along both edges.
    """
    n = pair.n
    ms = _points(m, n)
    w = _window(ms, n, w)
    if not ms:
        return SeparationVerdict(True)
    _, label = complement_labeller(pair.beta, ms, w)
    for k in range(2, n + 1):
        for cube in cubes_meeting(ms, k, n):
            witness = _cube_violation(cube, ms, pair.alpha, label)
            if witness is not None:
                return SeparationVerdict(False, witness)
    return SeparationVerdict(True)


def recheck_separation_witness(
    m: Iterable[Point], pair: AdjacencyPair, witness: SeparationWitness
) -> bool:
    """Independently confirm that ``witness`` is a genuine violation."""
    ms = frozenset(m)
    cube, cs, t1, t2, comp = (
        witness.cube,
        witness.subcube,
        witness.tau1,
        witness.tau2,
        witness.component,
    )
    cm = cube.points() & ms
    if comp not in components(pair.alpha, cm).blocks:
        return False
    faces = [d[0] for d in cube_decompositions(cube)]
    if cs not in faces:
        return False
    if len(cs.points() & comp) != max(len(f.points() & comp) for f in faces):
        return False
    p1 = {x for x in cs.translated(t1).points()} - ms
    p2 = {x for x in cs.translated(t2).points()} - ms
    if not p1 or not p2:
        return False
    part = complement_components(pair.beta, ms, Window.bounding(ms).dilate(1))
    blocks = {part.block_of(x) for x in p1 | p2}
    if len(blocks) != 1:
        return False
    t12 = tuple(a + b for a, b in zip(t1, t2))
    lhs = {x for x in cs.points() if tuple(a + b for a, b in zip(x, t12)) in comp}
    rhs = {
        x
        for x in cs.points()
        if tuple(a + b for a, b in zip(x, t1)) in comp
        and tuple(a + b for a, b in zip(x, t2)) in comp
    }
    return not lhs <= rhs


# -- manifold axioms ---------------------------------------------------------


def two_components_at(
    p: Point, m: Iterable[Point], beta: AdjacencySpec
) -> tuple[frozenset, frozenset]:
    """The two beta-components of omega(p) - M, the one holding the smallest point first.

    Raises ComponentCountError when there are not exactly two.
    """
    check_dim(p, beta.n)
    ms = frozenset(m)
    if p not in ms:
        raise ValueError(f"{p} is not a point of M")
    part = components(beta, omega(p) - ms)
    if len(part) != 2:
        raise ComponentCountError(p, part)
    return part.blocks[0], part.blocks[1]


def is_digital_manifold(
    m: Iterable[Point], pair: AdjacencyPair, w: Optional[Window] = None
) -> ManifoldVerdict:
    """Evaluate the four manifold axioms in order and report the first failure.

    Axiom 0 is the standing requirement that M be alpha-connected.
    """
    n = pair.n
    if n < 2:
        raise ValueError("digital manifolds need n >= 2")
    alpha, beta = pair.alpha, pair.beta
    ms = _points(m, n)
    w = _window(ms, n, w)

    part = components(alpha, ms)
    if len(part) != 1:
        return ManifoldVerdict(False, 0, CountWitness(ms, len(part)))

    for cube in cubes_meeting(ms, n, n):
        cm = cube.points() & ms
        c = len(components(alpha, cm))
        if c != 1:
            return ManifoldVerdict(False, 1, CountWitness(cm, c, cube=cube))

    blocks = {}
    for p in sorted(ms):
        try:
            blocks[p] = two_components_at(p, ms, beta)
        except ComponentCountError as err:
            rest = omega(p) - ms
            return ManifoldVerdict(False, 2, CountWitness(rest, err.count, point=p))

    for p in sorted(ms):
        for q in sorted(neighbors(alpha, p) & ms):
            around = neighbors(beta, q)
            for block in blocks[p]:
                if not around & block:
                    return ManifoldVerdict(False, 3, AdjacencyWitness(p, q, block))

    sep = check_separation_property(ms, pair, w)
    if not sep.holds:
        return ManifoldVerdict(False, 4, sep.witness)
    return ManifoldVerdict(True)


# -- double points and good pairs --------------------------------------------


def double_point_witnesses(z: Point, pair: AdjacencyPair) -> list[DoublePoint]:
    """Every double point of beta(z), with the (q, r, t) configuration exhibiting it."""
    alpha, beta = pair.alpha, pair.beta
    check_dim(z, pair.n)
    proto = AdjacencySpec.proto(pair.n)
    bz = neighbors(beta, z)
    pz = neighbors(proto, z)
    found = []
    for p in sorted(bz):
        pp = neighbors(proto, p)
        for q in sorted(pz & neighbors(alpha, p)):
            t = tuple(a - b for a, b in zip(q, p))
            r = tuple(a - b for a, b in zip(z, t))
            if r in bz and r in pp and is_simple_translation(t) and q in neighbors(alpha, r):
                found.append(DoublePoint(p, q, r, t))
    return found


def double_points(z: Point, pair: AdjacencyPair) -> frozenset:
    return frozenset(d.p for d in double_point_witnesses(z, pair))


def reference_points(pair: AdjacencyPair) -> list[Point]:
    """Points whose neighbourhoods represent every neighbourhood up to translation.

    Cubical relations are translation invariant, so the origin suffices.
    Khalimsky neighbourhoods depend on coordinate parity, so all of {0,1}^n.
    """
    n = pair.n
    if pair.alpha.is_cubical and pair.beta.is_cubical:
        return [(0,) * n]
    return list(itertools.product((0, 1), repeat=n))


def is_good_pair(pair: AdjacencyPair) -> GoodPairVerdict:
    if pair.n < 2:
        raise ValueError("good pairs need n >= 2")
    refs = tuple(reference_points(pair))
    for r in refs:
        m = neighbors(pair.beta, r)
        mv = is_digital_manifold(m, pair, Window.around(r, 2))
        dps = tuple(double_point_witnesses(r, pair))
        if not mv.holds or dps:
            return GoodPairVerdict(False, pair, refs, r, mv, dps)
    return GoodPairVerdict(True, pair, refs)


TABLE_MAX_DIM = 4
SLOW_MAX_DIM = 5


def _cubical_verdict(args: tuple[int, int, int]) -> GoodPairVerdict:
    n, l, k = args
    return is_good_pair(AdjacencyPair.cubical(n, l, k))


def good_pair_table(
    n: int, *, allow_slow: bool = False, workers: int = 1
) -> dict[tuple[int, int], GoodPairVerdict]:
    """Verdict for every cubical pair (alpha_l, alpha_k), keyed by (l, k)."""
    top = SLOW_MAX_DIM if allow_slow else TABLE_MAX_DIM
    if not 2 <= n <= top:
        raise ValueError(f"table dimension must be in 2..{top}, got {n}")
    keys = [(l, k) for l in range(n) for k in range(n)]
    jobs = [(n, l, k) for l, k in keys]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_cubical_verdict, jobs))
    else:
        verdicts = [_cubical_verdict(j) for j in jobs]
    return dict(zip(keys, verdicts))


# -- Jordan harness ----------------------------------------------------------


@dataclass(frozen=True)
class JordanReport:
    partition: ComponentPartition
    touches: dict = field(hash=False)
    foreground_connected: bool

    @property
    def count(self) -> int:
        return len(self.partition)

    @property
    def boundary_ok(self) -> bool:
        return all(self.touches.values())

    @property
    def separates(self) -> bool:
        """Exactly two complement components and every point touches both."""
        return self.count == 2 and self.boundary_ok


def jordan_check(
    m: Iterable[Point], pair: AdjacencyPair, w: Optional[Window] = None
) -> JordanReport:
    n = pair.n
    ms = _points(m, n)
    part = complement_components(pair.beta, ms, w)
    touches = {}
    for p in sorted(ms):
        around = neighbors(pair.beta, p)
        touches[p] = all(around & b for b in part.blocks)
    connected = len(components(pair.alpha, ms)) == 1
    return JordanReport(part, touches, connected)
