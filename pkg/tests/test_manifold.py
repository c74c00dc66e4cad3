import itertools

import pytest
from hypothesis import given, settings, strategies as st

from digitop.adjacency import AdjacencySpec, components, neighbors
from digitop.lattice import Window
from digitop.manifold import (
    AdjacencyPair,
    AdjacencyWitness,
    ComponentCountError,
    CountWitness,
    SeparationWitness,
    check_separation_property,
    double_point_witnesses,
    double_points,
    good_pair_table,
    is_digital_manifold,
    is_good_pair,
    jordan_check,
    omega,
    recheck_separation_witness,
    two_components_at,
)

from oracles import double_points_literal

DIAMOND = frozenset({(1, 0), (-1, 0), (0, 1), (0, -1)})
RING = frozenset(itertools.product((-1, 0, 1), repeat=2)) - {(0, 0)}


def cub(n, l, k):
    return AdjacencyPair.cubical(n, l, k)


def kh(n):
    return AdjacencyPair(AdjacencySpec.khalimsky(n), AdjacencySpec.khalimsky(n))


# -- separation property -------------------------------------------------------


def test_separation_examples():
    plus = DIAMOND | {(0, 0)}
    assert check_separation_property(plus, cub(2, 0, 1)).holds
    assert check_separation_property(set(), cub(2, 0, 1)).holds


@pytest.mark.parametrize("n", [2, 3])
def test_khalimsky_closed_neighbourhood_separates(n):
    a = AdjacencySpec.khalimsky(n)
    for p in itertools.product((0, 1), repeat=n):
        closed = neighbors(a, p) | {p}
        assert check_separation_property(closed, kh(n)).holds


def test_diagonal_pair_violates_separation():
    v = check_separation_property({(0, 0), (1, 1)}, cub(2, 0, 0))
    assert not v.holds
    w = v.witness
    assert w.subcube.points() == {(0, 0)}
    assert (w.tau1, w.tau2) == ((1, 0), (0, 1))
    assert w.component == {(0, 0), (1, 1)}
    assert recheck_separation_witness({(0, 0), (1, 1)}, cub(2, 0, 0), w)


def test_separation_window_validation():
    with pytest.raises(ValueError):
        check_separation_property(DIAMOND, cub(2, 0, 1), Window((-1, -1), (1, 1)))
    with pytest.raises(ValueError):
        check_separation_property(DIAMOND, cub(2, 0, 1), Window((5, 5), (9, 9)))


small_sets = st.integers(2, 3).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.integers(0, n - 1),
        st.integers(0, n - 1),
        st.sets(st.tuples(*[st.integers(0, 2)] * n), min_size=1, max_size=12),
    )
)


@settings(max_examples=200, deadline=None)
@given(small_sets)
def test_separation_witnesses_recheck(case):
    n, l, k, m = case
    pair = cub(n, l, k)
    v = check_separation_property(m, pair)
    assert v.holds == (v.witness is None)
    if not v.holds:
        assert recheck_separation_witness(m, pair, v.witness)


@settings(max_examples=60, deadline=None)
@given(small_sets, st.integers(1, 3))
def test_separation_stable_under_window_growth(case, extra):
    n, l, k, m = case
    pair = cub(n, l, k)
    base = Window.bounding(m).dilate(2)
    assert (
        check_separation_property(m, pair, base)
        == check_separation_property(m, pair, base.dilate(extra))
    )


# -- two components ------------------------------------------------------------


def test_two_components_examples():
    c, d = two_components_at((1, 0), RING, AdjacencySpec.cubical(2, 1))
    assert c == {(0, 0)} and d == {(2, 1), (2, 0), (2, -1)}
    c, d = two_components_at((1, 0), DIAMOND, AdjacencySpec.cubical(2, 1))
    assert c == {(0, 0)} and d == {(1, 1), (2, 1), (2, 0), (2, -1), (1, -1)}


def test_diamond_under_eight_background_has_one_local_component():
    # (0,0) touches (1,1) diagonally, so omega((1,0)) - diamond is one 8-block
    with pytest.raises(ComponentCountError) as err:
        two_components_at((1, 0), DIAMOND, AdjacencySpec.cubical(2, 0))
    assert err.value.count == 1


@pytest.mark.parametrize("n", [2, 3])
def test_two_components_in_khalimsky_neighbourhoods(n):
    a = AdjacencySpec.khalimsky(n)
    for centre in itertools.product((0, 1), repeat=n):
        m = neighbors(a, centre)
        for p in m:
            c, d = two_components_at(p, m, a)
            assert c == {centre} or d == {centre}


def test_two_components_requires_member():
    with pytest.raises(ValueError):
        two_components_at((5, 5), DIAMOND, AdjacencySpec.proto(2))


# -- manifold axioms -----------------------------------------------------------


def test_ring_is_manifold_with_four_foreground():
    assert is_digital_manifold(RING, cub(2, 1, 0)).holds


def test_ring_under_eight_eight_fails_component_adjacency():
    v = is_digital_manifold(RING, cub(2, 0, 0))
    assert not v.holds and v.failed_axiom == 3
    assert double_points((0, 0), cub(2, 0, 0))


def test_single_point_fails_two_components():
    for pair in (cub(2, 0, 1), cub(2, 1, 0), kh(2)):
        v = is_digital_manifold({(0, 0)}, pair)
        assert v.failed_axiom == 2 and v.witness.count == 1


def test_diamond_is_manifold_with_eight_foreground():
    assert is_digital_manifold(DIAMOND, cub(2, 0, 1)).holds


def test_disconnected_set_fails_precondition():
    v = is_digital_manifold(DIAMOND, cub(2, 1, 1))
    assert v.failed_axiom == 0 and v.witness.count == 4


def _recheck_manifold(m, pair, v):
    """Re-derive a manifold witness from scratch."""
    w = v.witness
    if v.failed_axiom == 0:
        return len(components(pair.alpha, m)) != 1
    if v.failed_axiom == 1:
        cm = w.cube.points() & m
        return w.cube.k == pair.n and len(components(pair.alpha, cm)) == w.count != 1
    if v.failed_axiom == 2:
        return len(components(pair.beta, omega(w.point) - m)) == w.count != 2
    if v.failed_axiom == 3:
        blocks = components(pair.beta, omega(w.p) - m).blocks
        return (
            w.q in neighbors(pair.alpha, w.p) & m
            and w.block in blocks
            and not neighbors(pair.beta, w.q) & w.block
        )
    return recheck_separation_witness(m, pair, w)


@settings(max_examples=150, deadline=None)
@given(small_sets)
def test_manifold_witnesses_recheck(case):
    n, l, k, m = case
    pair = cub(n, l, k)
    v = is_digital_manifold(m, pair)
    assert v == is_digital_manifold(m, pair)
    if not v.holds:
        assert isinstance(v.witness, (CountWitness, AdjacencyWitness, SeparationWitness))
        assert _recheck_manifold(frozenset(m), pair, v)


# -- double points -------------------------------------------------------------


def test_double_point_example():
    wit = double_point_witnesses((0, 0), cub(2, 0, 0))
    match = [d for d in wit if d.p == (1, 1) and d.q == (1, 0)]
    assert match and match[0].r == (0, 1) and match[0].t == (0, -1)
    assert double_points((0, 0), cub(2, 0, 1)) == set()
    for z in itertools.product((0, 1), repeat=2):
        assert double_points(z, kh(2)) == set()


def _literal(z, pair):
    proto = AdjacencySpec.proto(pair.n)
    return double_points_literal(
        z,
        lambda p: neighbors(pair.alpha, p),
        lambda p: neighbors(pair.beta, p),
        lambda p: neighbors(proto, p),
    )


@pytest.mark.parametrize("n", [2, 3])
def test_double_points_match_literal_definition(n):
    pairs = [cub(n, l, k) for l in range(n) for k in range(n)] + [kh(n)]
    for pair in pairs:
        for z in itertools.product((0, 1), repeat=n):
            assert double_points(z, pair) == _literal(z, pair)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_good_cubical_pairs_have_no_double_points_anywhere(n):
    good = [(l, n - 1) for l in range(n - 1)] + [(n - 1, k) for k in range(n - 1)]
    for l, k in good:
        for z in itertools.product((0, 1, 2), repeat=n):
            assert double_points(z, cub(n, l, k)) == set()


# -- good pairs ----------------------------------------------------------------


def test_good_pair_examples():
    assert is_good_pair(cub(2, 0, 1)).holds
    v = is_good_pair(cub(2, 1, 1))
    assert not v.holds and v.failed_reference == (0, 0)
    assert is_good_pair(kh(2)).holds


def test_khalimsky_checks_every_parity_class():
    v = is_good_pair(kh(2))
    assert set(v.references) == set(itertools.product((0, 1), repeat=2))
    assert is_good_pair(cub(2, 0, 1)).references == ((0, 0),)


def test_table_n2_and_order_matters():
    table = good_pair_table(2)
    assert {key for key, v in table.items() if v.holds} == {(0, 1), (1, 0)}
    assert not table[(0, 0)].holds and table[(0, 1)].holds


def test_table_n3():
    table = good_pair_table(3)
    assert {key for key, v in table.items() if v.holds} == {(0, 2), (1, 2), (2, 0), (2, 1)}


def test_table_parallel_matches_serial():
    assert good_pair_table(2, workers=2) == good_pair_table(2)


def test_table_range():
    with pytest.raises(ValueError):
        good_pair_table(1)
    with pytest.raises(ValueError):
        good_pair_table(5)


def test_failed_pairs_carry_witness():
    v = is_good_pair(cub(3, 0, 0))
    assert not v.holds
    assert v.double_points and not v.manifold.holds
    d = is_good_pair(cub(3, 1, 1))
    assert d.manifold.holds and d.double_points


# -- Jordan harness ------------------------------------------------------------


def test_jordan_examples():
    rep = jordan_check(DIAMOND, cub(2, 0, 1))
    assert rep.count == 2 and rep.boundary_ok and rep.separates
    assert jordan_check(DIAMOND, cub(2, 1, 0)).count == 1
    assert jordan_check({(0, 0)}, cub(2, 0, 1)).count == 1
    assert jordan_check(set(), cub(2, 0, 1)).count == 1


def test_jordan_on_khalimsky_circle():
    ring = neighbors(AdjacencySpec.khalimsky(2), (0, 0))
    assert jordan_check(ring, kh(2)).separates
