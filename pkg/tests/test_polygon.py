import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mutanta import (
    DiagonalClass,
    Quiver,
    Triangulation,
    are_isomorphic,
    canonical_form,
    classify_close_diagonal,
    crosses,
    delete_vertex,
    diagonal,
    distance,
    enumerate_triangulations,
    extend_at,
    factor_out,
    fan_triangulation,
    flip,
    is_close_to_border,
    is_connected,
    linear_quiver,
    mutate,
    quiver_of,
    rotate,
    rotation_canonical,
    triangles,
    triangulation_from_json,
    triangulation_to_json,
)

PENTAGON_FAN = fan_triangulation(5, 0)
HEXAGON_FAN = fan_triangulation(6, 0)
HEXAGON_PINWHEEL = Triangulation(6, [(0, 2), (2, 4), (0, 4)])


def new_diagonal_of_extension(t, e):
    """The close-to-border diagonal added by extend_at(t, e)."""
    return (e, e + 2) if e < t.size - 1 else (0, t.size - 1)


class TestDistance:
    def test_same_vertex(self):
        assert distance(0, 0, 7) == 0

    def test_two_steps(self):
        assert distance(0, 2, 7) == 2

    def test_wraparound_minimum(self):
        assert distance(1, 6, 7) == 2

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            distance(0, 7, 7)


class TestDiagonalValidation:
    def test_normalizes_order(self):
        assert diagonal(3, 0, 5) == (0, 3)

    def test_rejects_border_edges(self):
        with pytest.raises(ValueError):
            diagonal(0, 1, 5)
        with pytest.raises(ValueError):
            diagonal(0, 4, 5)
        with pytest.raises(ValueError):
            diagonal(2, 2, 5)


class TestCrosses:
    def test_interleaved_cross(self):
        assert crosses((0, 2), (1, 3), 5)

    def test_shared_endpoint_never_crosses(self):
        assert not crosses((0, 2), (0, 3), 5)
        assert not crosses((0, 2), (2, 4), 5)

    def test_symmetry_exhaustive(self):
        m = 8
        diags = [
            (a, b)
            for a in range(m)
            for b in range(a + 1, m)
            if distance(a, b, m) >= 2
        ]
        for d1, d2 in itertools.combinations(diags, 2):
            assert crosses(d1, d2, m) == crosses(d2, d1, m)


class TestTriangulationType:
    def test_requires_exact_diagonal_count(self):
        with pytest.raises(ValueError):
            Triangulation(5, [(0, 2)])
        with pytest.raises(ValueError):
            Triangulation(4, [])

    def test_rejects_crossing_diagonals(self):
        with pytest.raises(ValueError):
            Triangulation(5, [(0, 2), (1, 3)])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Triangulation(5, [(0, 2), (2, 0)])

    def test_bare_triangle_is_allowed(self):
        assert Triangulation(3, []).diagonals == ()

    def test_diagonals_sorted(self):
        t = Triangulation(5, [(0, 3), (0, 2)])
        assert t.diagonals == ((0, 2), (0, 3))

    def test_triangle_faces(self):
        assert triangles(PENTAGON_FAN) == [(0, 1, 2), (0, 2, 3), (0, 3, 4)]
        assert len(triangles(HEXAGON_PINWHEEL)) == 4


class TestCloseToBorder:
    def test_distance_two(self):
        assert is_close_to_border((0, 2), 6)

    def test_distance_three(self):
        assert not is_close_to_border((0, 3), 6)

    def test_wraparound(self):
        assert is_close_to_border((0, 5), 7)


class TestFan:
    def test_pentagon_fan(self):
        assert PENTAGON_FAN.diagonals == ((0, 2), (0, 3))

    def test_square_fan_other_apex(self):
        assert fan_triangulation(4, 1).diagonals == ((1, 3),)

    def test_fan_quiver_is_linear(self):
        for m in range(4, 10):
            assert are_isomorphic(quiver_of(fan_triangulation(m, 0)), linear_quiver(m - 3))


class TestQuiverOf:
    def test_pentagon_fan_single_arrow(self):
        assert quiver_of(PENTAGON_FAN) == Quiver(2, [(1, 0)])

    def test_pinwheel_is_oriented_triangle(self):
        q = quiver_of(HEXAGON_PINWHEEL)
        assert q.arrows == frozenset({(0, 2), (2, 1), (1, 0)})

    def test_empty_triangulation_rejected(self):
        with pytest.raises(ValueError):
            quiver_of(Triangulation(3, []))

    def test_every_small_triangulation_gives_type_a(self, triangulation_catalog):
        from mutanta import is_type_a_quiver

        for m in range(4, 10):
            for t in triangulation_catalog(m).members:
                assert is_type_a_quiver(quiver_of(t))


class TestFlip:
    def test_pentagon_fan_flip(self):
        assert flip(PENTAGON_FAN, (0, 2)).diagonals == ((0, 3), (1, 3))

    def test_flip_is_involution_exhaustively(self, triangulation_catalog):
        for m in range(4, 8):
            for t in triangulation_catalog(m).members:
                for d in t.diagonals:
                    flipped = flip(t, d)
                    replacement = (set(flipped.diagonals) - set(t.diagonals)).pop()
                    assert flip(flipped, replacement) == t

    def test_flip_missing_diagonal(self):
        with pytest.raises(ValueError):
            flip(PENTAGON_FAN, (1, 3))

    def test_flip_matches_mutation_on_hexagon_fan(self):
        t = HEXAGON_FAN
        idx = t.index_of((0, 3))
        assert canonical_form(quiver_of(flip(t, (0, 3)))) == canonical_form(
            mutate(quiver_of(t), idx)
        )


class TestRotate:
    def test_identity(self):
        assert rotate(PENTAGON_FAN, 0) == PENTAGON_FAN

    def test_full_turn_inverse(self):
        for i in range(5):
            assert rotate(rotate(PENTAGON_FAN, i), 5 - i) == PENTAGON_FAN

    def test_label_shift(self):
        assert rotate(PENTAGON_FAN, 1).diagonals == ((1, 3), (1, 4))

    def test_quiver_class_is_rotation_invariant(self, triangulation_catalog):
        for m in range(4, 8):
            for t in triangulation_catalog(m).members:
                expected = canonical_form(quiver_of(t))
                for i in range(1, m):
                    assert canonical_form(quiver_of(rotate(t, i))) == expected


class TestRotationCanonical:
    def test_pentagon_fan_orbit(self):
        assert rotation_canonical(PENTAGON_FAN).orbit_size == 5

    def test_pinwheel_orbit(self):
        rc = rotation_canonical(HEXAGON_PINWHEEL)
        assert rc.orbit_size == 2
        assert rc.representative == Triangulation(6, [(0, 2), (0, 4), (2, 4)])

    def test_orbit_size_divides_and_exceeds_one(self, triangulation_catalog):
        for m in range(4, 9):
            for t in triangulation_catalog(m).members:
                size = rotation_canonical(t).orbit_size
                assert m % size == 0
                assert 2 <= size <= m

    def test_representative_is_minimum(self):
        rc = rotation_canonical(rotate(PENTAGON_FAN, 3))
        assert rc.representative == PENTAGON_FAN


class TestClassification:
    def test_pentagon_fan_short_diagonal_is_sink(self):
        assert classify_close_diagonal(PENTAGON_FAN, (0, 2)) == DiagonalClass.SINK

    def test_pinwheel_diagonal_on_cycle(self):
        assert classify_close_diagonal(HEXAGON_PINWHEEL, (0, 2)) == DiagonalClass.ON_CYCLE

    def test_hexagon_fan_not_on_cycle(self):
        assert classify_close_diagonal(HEXAGON_FAN, (0, 2)) != DiagonalClass.ON_CYCLE

    def test_requires_close_diagonal(self):
        with pytest.raises(ValueError):
            classify_close_diagonal(HEXAGON_FAN, (0, 3))

    def test_square_lone_diagonal_counts_as_sink(self):
        assert classify_close_diagonal(Triangulation(4, [(0, 2)]), (0, 2)) == DiagonalClass.SINK

    def test_totality_and_cycle_agreement(self, triangulation_catalog):
        for m in range(4, 9):
            for t in triangulation_catalog(m).members:
                q = quiver_of(t)
                for idx, d in enumerate(t.diagonals):
                    if not is_close_to_border(d, m):
                        continue
                    label = classify_close_diagonal(t, d)
                    on_cycle = any(
                        (idx, x) in q.arrows and (x, y) in q.arrows and (y, idx) in q.arrows
                        for x in range(q.n)
                        for y in range(q.n)
                    )
                    assert (label == DiagonalClass.ON_CYCLE) == on_cycle


class TestFactorOut:
    def test_hexagon_fan_factors_to_pentagon_fan(self):
        assert factor_out(HEXAGON_FAN, (0, 2)) == PENTAGON_FAN

    def test_square_factors_to_bare_triangle(self):
        t = factor_out(Triangulation(4, [(1, 3)]), (1, 3))
        assert t.size == 3 and t.diagonals == ()

    def test_wraparound_cut_vertex(self):
        t = Triangulation(5, [(0, 3), (1, 3)])
        got = factor_out(t, (0, 3))
        assert got == Triangulation(4, [(1, 3)])

    def test_matches_vertex_deletion_in_quiver(self, triangulation_catalog):
        for m in range(5, 9):
            for t in triangulation_catalog(m).members:
                for idx, d in enumerate(t.diagonals):
                    if not is_close_to_border(d, m):
                        continue
                    shrunk = factor_out(t, d)
                    assert are_isomorphic(
                        delete_vertex(quiver_of(t), idx), quiver_of(shrunk)
                    )

    def test_rejects_far_diagonal(self):
        with pytest.raises(ValueError):
            factor_out(HEXAGON_FAN, (0, 3))


class TestExtendAt:
    def test_square_extension(self):
        got = extend_at(Triangulation(4, [(1, 3)]), 0)
        assert got == Triangulation(5, [(0, 2), (2, 4)])

    def test_round_trip_every_pentagon_edge(self, triangulation_catalog):
        for t in triangulation_catalog(5).members:
            for e in range(5):
                grown = extend_at(t, e)
                added = new_diagonal_of_extension(t, e)
                assert added in grown.diagonals
                assert is_close_to_border(added, 6)
                assert factor_out(grown, added) == t

    def test_round_trip_wrapping_edge(self):
        # the inserted vertex takes label 5; the added diagonal joins the
        # original endpoints 4 and 0 of the wrapping border edge
        grown = extend_at(PENTAGON_FAN, 4)
        assert grown == fan_triangulation(6, 0)
        assert factor_out(grown, (0, 4)) == PENTAGON_FAN

    def test_bad_edge_index(self):
        with pytest.raises(ValueError):
            extend_at(PENTAGON_FAN, 5)

    def test_adjacent_extensions_bounded_and_separated_by_rotation(self, triangulation_catalog):
        # Extensions whose new diagonal bounds a triangle with a fixed diagonal
        # beta: at most three border edges allow one (for polygons above the
        # square), and two such extensions give isomorphic quivers only when
        # the grown triangulations are rotations of each other.
        for m in (5, 6):
            for t in triangulation_catalog(m).members:
                for beta in t.diagonals:
                    adjacent = []
                    for e in range(m):
                        grown = extend_at(t, e)
                        added = new_diagonal_of_extension(t, e)
                        shifted_beta = tuple(sorted((x + (x > e), y + (y > e))
                                                    for x, y in [beta]))[0]
                        shares = any(
                            set(added) <= set(tri) and set(shifted_beta) <= set(tri)
                            for tri in triangles(grown)
                        )
                        if shares:
                            adjacent.append(grown)
                    assert len(adjacent) <= 3
                    for g1, g2 in itertools.combinations(adjacent, 2):
                        same_quiver = canonical_form(quiver_of(g1)) == canonical_form(
                            quiver_of(g2)
                        )
                        same_orbit = (
                            rotation_canonical(g1).representative
                            == rotation_canonical(g2).representative
                        )
                        assert same_quiver == same_orbit

    def test_square_has_four_adjacent_extensions_all_rotation_equivalent(self):
        # degenerate base case: every border edge of the square extends next
        # to its lone diagonal, and all four results are the same pentagon
        # triangulation up to rotation
        t = Triangulation(4, [(1, 3)])
        reps = set()
        for e in range(4):
            grown = extend_at(t, e)
            reps.add(rotation_canonical(grown).representative)
        assert len(reps) == 1


class TestCommutation:
    def test_flip_equals_mutation_exhaustively(self, triangulation_catalog):
        for m in range(4, 9):
            for t in triangulation_catalog(m).members:
                q = quiver_of(t)
                for idx, d in enumerate(t.diagonals):
                    assert canonical_form(quiver_of(flip(t, d))) == canonical_form(
                        mutate(q, idx)
                    )


class TestDeletionConnectivity:
    def test_biconditional_exhaustively(self, triangulation_catalog):
        for m in range(5, 9):
            for t in triangulation_catalog(m).members:
                q = quiver_of(t)
                for idx, d in enumerate(t.diagonals):
                    assert is_connected(delete_vertex(q, idx)) == is_close_to_border(d, m)


@st.composite
def flip_walks(draw):
    m = draw(st.integers(min_value=4, max_value=10))
    picks = draw(st.lists(st.integers(min_value=0, max_value=m - 4), max_size=10))
    return m, picks


class TestRandomWalkProperties:
    @given(flip_walks())
    @settings(max_examples=100, deadline=None)
    def test_flip_walk_preserves_invariants_and_commutes(self, walk):
        m, picks = walk
        t = fan_triangulation(m, 0)
        for pick in picks:
            d = t.diagonals[pick]
            q = quiver_of(t)
            flipped = flip(t, d)
            assert len(flipped.diagonals) == m - 3
            assert canonical_form(quiver_of(flipped)) == canonical_form(
                mutate(q, t.index_of(d))
            )
            t = flipped

    @given(flip_walks(), st.integers(min_value=0, max_value=20))
    @settings(max_examples=60, deadline=None)
    def test_rotation_commutes_with_canonical(self, walk, steps):
        m, picks = walk
        t = fan_triangulation(m, 0)
        for pick in picks:
            t = flip(t, t.diagonals[pick])
        assert rotation_canonical(rotate(t, steps)) == rotation_canonical(t)


class TestSerialization:
    def test_json_round_trip(self):
        data = triangulation_to_json(PENTAGON_FAN)
        assert data == {"polygon_size": 5, "diagonals": [[0, 2], [0, 3]]}
        assert triangulation_from_json(data) == PENTAGON_FAN

    def test_json_rejects_garbage(self):
        with pytest.raises(ValueError):
            triangulation_from_json({"polygon_size": 5})
        with pytest.raises(ValueError):
            triangulation_from_json({"polygon_size": 5, "diagonals": [[0, 2], [1, 3]]})
