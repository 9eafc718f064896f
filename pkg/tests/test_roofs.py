"""Decorated roofs: codes, skylines, covering roofs and moves."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tripoly.planar import NearEdge, orient
from tripoly.roofs import (
    DecoratedRoof,
    closed_triangle_empty,
    code_count,
    covering_roofs,
    decode,
    encode,
    is_covering,
    is_minimal_triangle,
    skyline,
    skyline_points,
    skyline_y,
    sub_edges,
    successors,
    triangle_class,
)

from corpus import EDGE8, EDGE12, EDGE_A

heights_st = st.lists(
    st.integers(min_value=-3, max_value=3), min_size=1, max_size=6
)


def all_roofs(n):
    """Every decorated roof over P_0..P_n, by brute force."""
    from itertools import combinations

    out = []
    interior = range(1, n)
    for r in range(n):
        for mid in combinations(interior, r):
            idx = (0,) + mid + (n,)
            for d in range(len(idx) - 1):
                out.append(DecoratedRoof(idx, d))
    return out


class TestRender:
    def test_marked_segment_in_brackets(self):
        assert DecoratedRoof((0, 1, 4, 5), 1).render() == "(0 [1 4] 5)"
        assert DecoratedRoof((0, 1, 3, 6, 7), 2).render() == "(0 1 [3 6] 7)"
        assert DecoratedRoof((0, 5), 0).render() == "([0 5])"


class TestCodes:
    def test_pinned_codes(self):
        assert encode(DecoratedRoof((0, 2, 3, 5), 0), 5) == 6
        assert encode(DecoratedRoof((0, 1, 3, 4, 5), 2), 5) == 45
        assert encode(DecoratedRoof((0, 1, 3, 5), 0), 5) == 5
        assert encode(DecoratedRoof((0, 1, 4, 5), 1), 5) == 25

    def test_decode_is_inverse(self):
        for n in range(1, 7):
            for roof in all_roofs(n):
                code = encode(roof, n)
                assert decode(code, n) == roof

    def test_count_matches_enumeration(self):
        for n in range(1, 8):
            assert code_count(n) == len(all_roofs(n))

    def test_codes_are_not_contiguous(self):
        # the largest valid code exceeds the number of valid codes
        top = max(encode(r, 5) for r in all_roofs(5))
        assert top == 79
        assert code_count(5) == 48

    def test_encode_validation(self):
        with pytest.raises(ValueError):
            encode(DecoratedRoof((1, 5), 0), 5)
        with pytest.raises(ValueError):
            encode(DecoratedRoof((0, 4), 0), 5)
        with pytest.raises(ValueError):
            encode(DecoratedRoof((0, 5), 1), 5)

    def test_decode_validation(self):
        with pytest.raises(ValueError):
            decode(-1, 5)
        with pytest.raises(ValueError):
            decode(16, 5)  # chord roof cannot carry marker 1

    def test_code_count_needs_positive_n(self):
        with pytest.raises(ValueError):
            code_count(0)


class TestSkyline:
    def test_skyline_points(self):
        roof = DecoratedRoof((0, 2, 5), 0)
        assert skyline_points(EDGE_A, roof) == ((0, 0), (2, -1), (5, 0))

    def test_skyline_accepts_hosts_and_index_tuples(self):
        roof = DecoratedRoof((0, 2, 5), 0)
        sky = ((0, 0), (2, -1), (5, 0))
        assert skyline(roof, EDGE_A) == sky
        assert skyline(roof, NearEdge(EDGE_A)) == sky
        assert skyline((0, 2, 5), NearEdge(EDGE_A)) == sky

    def test_skyline_y_interpolates(self):
        roof = DecoratedRoof((0, 1, 3, 5), 0)
        assert skyline_y(EDGE_A, roof, 2) == 1
        assert skyline_y(EDGE_A, roof, 4) == Fraction(1, 2)
        assert skyline_y(EDGE_A, roof, 0) == 0

    def test_skyline_y_vertical_segment_takes_max(self):
        pts = ((0, 0), (0, 2), (3, 2))
        roof = DecoratedRoof((0, 1, 2), 0)
        assert skyline_y(pts, roof, 0) == 2

    def test_skyline_y_outside_span(self):
        roof = DecoratedRoof((0, 5), 0)
        with pytest.raises(ValueError):
            skyline_y(EDGE_A, roof, 6)


class TestCovering:
    def test_is_covering(self):
        assert is_covering(EDGE_A, (0, 1, 3, 5))
        assert not is_covering(EDGE_A, (0, 5))
        assert not is_covering(EDGE_A, (0, 2, 4, 5))
        assert is_covering(EDGE_A, (0, 1, 2, 3, 4, 5))

    def test_covering_roofs_of_zigzag(self):
        assert covering_roofs(EDGE_A) == [
            (0, 1, 2, 3, 4, 5),
            (0, 1, 2, 3, 5),
            (0, 1, 3, 4, 5),
            (0, 1, 3, 5),
        ]

    def test_covering_roofs_all_cover(self):
        for pts in (EDGE_A, EDGE8, EDGE12):
            roofs = covering_roofs(pts)
            assert roofs
            assert all(is_covering(pts, idx) for idx in roofs)
            assert all(idx[0] == 0 and idx[-1] == len(pts) - 1 for idx in roofs)

    @given(heights_st)
    def test_covering_roofs_match_filtered_subsets(self, heights):
        from itertools import combinations

        pts = tuple(enumerate([0] + heights + [0]))
        n = len(pts) - 1
        expect = sorted(
            (0,) + mid + (n,)
            for r in range(n)
            for mid in combinations(range(1, n), r)
            if is_covering(pts, (0,) + mid + (n,))
        )
        assert sorted(covering_roofs(pts)) == expect


class TestSubEdges:
    def test_zigzag_sub_edges(self):
        assert sub_edges(EDGE_A) == [
            (0, 1, 2, 3, 4, 5),
            (0, 1, 2, 4, 5),
            (0, 2, 3, 4, 5),
            (0, 2, 4, 5),
        ]

    def test_eight_gap_edge_has_32(self):
        subs = sub_edges(EDGE8)
        assert len(subs) == 32
        assert (0, 1, 3, 4, 5, 7, 8) in subs

    def test_sub_edges_keep_lower_corners(self):
        pts = list(EDGE_A)
        corner_idx = {pts.index(c) for c in NearEdge(EDGE_A).lower_corners()}
        for idx in sub_edges(EDGE_A):
            assert corner_idx <= set(idx)


class TestTriangles:
    def test_triangle_class(self):
        assert triangle_class((0, 0), (1, -1), (2, 0)) == 1
        assert triangle_class((0, 0), (1, 1), (2, 0)) == -1
        assert triangle_class((0, 0), (1, 0), (2, 0)) == 0

    def test_closed_triangle_empty(self):
        pts = ((0, 0), (4, 0), (0, 4), (1, 1))
        assert not closed_triangle_empty(pts, 0, 1, 2)
        assert closed_triangle_empty(pts, 0, 1, 3)

    def test_boundary_point_blocks_emptiness(self):
        pts = ((0, 0), (2, 0), (4, 0), (2, 2))
        assert not closed_triangle_empty(pts, 0, 2, 3)
        assert closed_triangle_empty(pts, 0, 1, 3)

    def test_degenerate_triangle_is_not_empty(self):
        pts = ((0, 0), (1, 0), (2, 0))
        assert not closed_triangle_empty(pts, 0, 1, 2)

    def test_is_minimal_triangle_looks_up_points(self):
        host = NearEdge(EDGE_A)
        assert is_minimal_triangle(host, (0, 0), (1, 1), (2, -1))
        assert not is_minimal_triangle(
            ((0, 0), (2, 0), (4, 0), (2, 2)), (0, 0), (4, 0), (2, 2)
        )


class TestSuccessors:
    def test_insert_needs_point_above_chord(self):
        up = ((0, 0), (1, 1), (2, 0))
        down = ((0, 0), (1, -1), (2, 0))
        assert successors(up, DecoratedRoof((0, 2), 0)) == [
            DecoratedRoof((0, 1, 2), 0)
        ]
        assert successors(down, DecoratedRoof((0, 2), 0)) == []

    def test_merge_needs_point_below_chord(self):
        up = ((0, 0), (1, 1), (2, 0))
        down = ((0, 0), (1, -1), (2, 0))
        assert successors(up, DecoratedRoof((0, 1, 2), 0)) == []
        assert successors(down, DecoratedRoof((0, 1, 2), 0)) == [
            DecoratedRoof((0, 2), 0)
        ]

    def test_moves_left_of_marker_are_frozen(self):
        roof = DecoratedRoof((0, 1, 3, 6, 7, 9, 10, 12), 2)
        got = {(r.indices, r.d) for r in successors(EDGE12, roof)}
        assert got == {
            ((0, 1, 3, 4, 6, 7, 9, 10, 12), 2),
            ((0, 1, 3, 6, 7, 8, 9, 10, 12), 4),
            ((0, 1, 3, 6, 7, 9, 10, 11, 12), 6),
            ((0, 1, 6, 7, 9, 10, 12), 1),
            ((0, 1, 3, 6, 9, 10, 12), 3),
            ((0, 1, 3, 6, 7, 9, 12), 5),
        }

    def test_immediate_mode_requires_minimal_triangles(self):
        pts = ((0, 0), (1, 2), (2, 1), (3, 0))
        roof = DecoratedRoof((0, 3), 0)
        assert successors(pts, roof) == [
            DecoratedRoof((0, 1, 3), 0),
            DecoratedRoof((0, 2, 3), 0),
        ]
        assert successors(pts, roof, immediate=True) == [
            DecoratedRoof((0, 2, 3), 0)
        ]

    def test_predicate_injection_matches_default(self):
        roof = DecoratedRoof((0, 1, 3, 6, 7, 9, 10, 12), 2)
        orient3 = lambda i, j, k: orient(EDGE12[i], EDGE12[j], EDGE12[k])
        minimal3 = lambda i, j, k: closed_triangle_empty(EDGE12, i, j, k)
        assert successors(EDGE12, roof, orient3=orient3) == successors(
            EDGE12, roof
        )
        assert successors(
            EDGE12, roof, immediate=True, minimal3=minimal3
        ) == successors(EDGE12, roof, immediate=True)

    def test_new_marker_freezes_everything_left(self):
        # after a move at position k every successor's marker equals k
        roof = DecoratedRoof((0, 1, 3, 6, 7, 9, 10, 12), 0)
        for nxt in successors(EDGE12, roof):
            k = nxt.d
            if len(nxt.indices) > len(roof.indices):
                assert nxt.indices[: k + 1] == roof.indices[: k + 1]
            else:
                assert nxt.indices[: k + 1] == roof.indices[: k + 1]
                assert nxt.indices[k + 1 :] == roof.indices[k + 2 :]
