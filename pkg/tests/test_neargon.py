"""Near-edges and near-gons: edge polynomials, gluing, recovery, realization."""
from __future__ import annotations

import pytest

from tripoly.exactmath import (
    PolyST,
    PolyT,
    catalan_pair_t,
    complete_edge_basis,
    maximal_edge_basis,
    p_basis_coefficients,
)
from tripoly.neargon import (
    EDGE_METHODS,
    EdgePolynomial,
    NearGon,
    compose,
    convex_edge_complete,
    convex_edge_maximal,
    convex_edge_poly,
    convex_edge_states,
    covering_roof_edge_poly,
    edge_poly,
    realize,
    recover_edge_poly_from_counts,
)
from tripoly.planar import NearEdge, convex_profile, vertical_mirror
from tripoly.transfer import complete_config_poly, max_config_count
from tripoly.weighted import straight_edge, weighted_complete_poly

from corpus import (
    CATALOG_EQUAL_PAIRS,
    CATALOG_HEIGHTS,
    CATALOG_MIRROR_PAIRS,
    CATALOG_POLYS,
    CATALOG_PRODUCTS,
    EDGE12,
    EDGE_A,
    EDGE_A_PCOEFFS,
    EDGE_B,
    EDGE_B_PCOEFFS,
    EDGE_C,
    EDGE_C_PCOEFFS,
    FANS,
    GON_POLY,
    SMALL_EDGES,
    catalog_edge,
    TRIANGLE_POLY,
)
from test_transfer import st_from_pcoeffs

from tripoly.planar import Configuration


def gon_edges():
    return NearEdge(EDGE_A), NearEdge(EDGE_B), NearEdge(EDGE_C)


class TestEdgePolynomial:
    def test_maximal_is_the_top_slice(self):
        ep = edge_poly(NearEdge(EDGE_C))
        assert ep.length == 5
        assert ep.maximal.c == ep.complete.coefficient_s(10).c

    def test_p_coefficient_tables(self):
        assert edge_poly(NearEdge(EDGE_A)).p_coefficients() == EDGE_A_PCOEFFS
        assert edge_poly(NearEdge(EDGE_B)).p_coefficients() == EDGE_B_PCOEFFS
        assert edge_poly(NearEdge(EDGE_C)).p_coefficients() == EDGE_C_PCOEFFS

    def test_maximal_of_the_zigzag(self):
        q = edge_poly(NearEdge(EDGE_A)).maximal
        assert p_basis_coefficients(q) == {3: 14, 4: 7, 5: 1}


class TestEdgeMethods:
    def test_method_names(self):
        assert EDGE_METHODS == ("auto", "tm", "roofs", "convex")

    def test_unknown_method(self):
        with pytest.raises(ValueError, match="unknown method"):
            edge_poly(NearEdge(EDGE_A), method="fast")

    def test_convex_method_rejects_non_convex_edges(self):
        with pytest.raises(ValueError, match="not strictly convex"):
            edge_poly(NearEdge(EDGE_C), method="convex")

    def test_all_methods_agree_on_small_edges(self):
        for edge in SMALL_EDGES:
            auto = edge_poly(edge).complete
            assert edge_poly(edge, method="tm").complete == auto, edge
            assert edge_poly(edge, method="roofs").complete == auto, edge
            if convex_profile(edge) is not None:
                assert edge_poly(edge, method="convex").complete == auto, edge

    def test_straight_edges_use_the_basis(self):
        for a in range(1, 6):
            assert edge_poly(straight_edge(a)).complete == complete_edge_basis(a)

    @pytest.mark.slow
    def test_methods_agree_on_a_wide_edge(self):
        edge = NearEdge(EDGE12)
        assert (
            edge_poly(edge, method="roofs").complete
            == edge_poly(edge, method="tm").complete
        )


class TestCoveringRoofRoute:
    def test_zigzag(self):
        ep = covering_roof_edge_poly(NearEdge(EDGE_A))
        assert ep.length == 5
        assert ep.complete == st_from_pcoeffs(EDGE_A_PCOEFFS)


class TestConvexRecursion:
    def test_state_table_of_the_zigzag_profile(self):
        states = convex_edge_states((1, -1, 1, -1), "complete")
        assert states[0].c == {(1, 1, 0): 1}
        assert states[1].c == {(2, 2, 1): 1, (1, 1, 0): 1}
        assert states[2].c == {(3, 2, 2): 1, (2, 1, 1): 1, (3, 3, 0): 1, (2, 2, 0): 1}
        assert states[3].c == {
            (4, 3, 3): 1, (3, 2, 2): 2, (4, 4, 1): 1, (3, 3, 1): 1,
            (2, 1, 1): 1, (3, 3, 0): 1, (2, 2, 0): 1,
        }
        assert states[4].c == {
            (5, 3, 4): 1, (4, 2, 3): 2, (5, 4, 2): 1, (4, 3, 2): 1,
            (3, 1, 2): 1, (4, 3, 1): 1, (3, 2, 1): 1, (5, 4, 0): 5,
            (4, 3, 0): 4, (5, 5, 0): 1, (4, 4, 0): 2, (3, 2, 0): 1,
            (3, 3, 0): 1,
        }

    def test_seeds(self):
        assert convex_edge_states((), "complete")[0].c == {(1, 1, 0): 1}
        assert convex_edge_states((), "maximal")[0].c == {(0, 1, 0): 1}

    def test_bad_mode_and_profile(self):
        with pytest.raises(ValueError, match="mode"):
            convex_edge_states((1,), "fastest")
        with pytest.raises(ValueError, match="profile entries"):
            convex_edge_states((1, 0))
        with pytest.raises(ValueError, match="mode"):
            convex_edge_poly((1,), "fastest")

    def test_complete_matches_the_zigzag(self):
        assert convex_edge_complete((1, -1, 1, -1)) == st_from_pcoeffs(
            EDGE_A_PCOEFFS
        )

    def test_maximal_variant_matches_the_top_slice(self):
        for profile in [(), (1,), (-1,), (1, -1), (1, -1, 1, -1), (-1, -1, 1)]:
            ep = convex_edge_poly(profile)
            assert isinstance(ep, EdgePolynomial)
            lean = convex_edge_poly(profile, "maximal")
            assert isinstance(lean, PolyT)
            assert lean == ep.maximal
            assert convex_edge_maximal(profile) == lean

    def test_empty_profile_is_the_unit_edge(self):
        assert convex_edge_complete(()) == complete_edge_basis(1)


class TestCatalog:
    def test_all_polynomials(self):
        for key, expected in CATALOG_POLYS.items():
            assert edge_poly(catalog_edge(key)).complete == expected, key

    def test_equal_pairs(self):
        for a, b in CATALOG_EQUAL_PAIRS:
            assert CATALOG_POLYS[a] == CATALOG_POLYS[b]

    def test_mirror_pairs_map_to_each_other(self):
        for a, b in CATALOG_MIRROR_PAIRS:
            mirrored = vertical_mirror(catalog_edge(a)).translate_to_origin()
            assert mirrored.points == catalog_edge(b).points

    def test_mirroring_preserves_the_polynomial(self):
        for key in CATALOG_HEIGHTS:
            edge = catalog_edge(key)
            assert (
                edge_poly(vertical_mirror(edge)).complete
                == edge_poly(edge).complete
            ), key

    def test_product_identities(self):
        for key, factor_keys in CATALOG_PRODUCTS.items():
            prod = PolyST({(0, 0): 1})
            for fk in factor_keys:
                prod = prod * CATALOG_POLYS[fk]
            assert CATALOG_POLYS[key] == prod, key


class TestNearGon:
    def test_needs_two_edges(self):
        with pytest.raises(ValueError, match="two edges"):
            NearGon((NearEdge(EDGE_A),))

    def test_container_protocol(self):
        gon = NearGon(gon_edges())
        assert len(gon) == 3
        assert list(gon) == list(gon_edges())


class TestCompose:
    def test_three_edge_gon(self):
        polys = [edge_poly(e) for e in gon_edges()]
        assert compose(polys).c == GON_POLY
        assert compose(polys, maximal=True) == 194939

    def test_maximal_equals_leading_coefficient(self):
        polys = [edge_poly(e) for e in gon_edges()]
        assert compose(polys, maximal=True) == compose(polys).leading()

    def test_straight_edges_reproduce_weighted_polygons(self):
        polys = [edge_poly(straight_edge(a)) for a in (5, 4, 5)]
        assert compose(polys).c == TRIANGLE_POLY
        assert compose(polys).c == weighted_complete_poly((5, 4, 5)).c

    def test_digon_composition(self):
        polys = [edge_poly(straight_edge(a)) for a in (9, 7)]
        assert compose(polys, maximal=True) == 792

    def test_needs_two_polynomials(self):
        with pytest.raises(ValueError, match="two edges"):
            compose([edge_poly(NearEdge(EDGE_A))])


class TestRecovery:
    def test_fan_counts_of_the_six_point_edge(self):
        counts = [
            max_config_count(Configuration(EDGE_C + FANS[: k + 1]))
            for k in range(3)
        ]
        assert counts == [19, 87, 334]
        recovered = recover_edge_poly_from_counts(counts, (3, 5))
        assert recovered == edge_poly(NearEdge(EDGE_C)).maximal
        assert p_basis_coefficients(recovered) == {3: 10, 4: 7, 5: 2}

    def test_unit_edge(self):
        assert recover_edge_poly_from_counts((1,), (1, 1)) == maximal_edge_basis(1)

    def test_round_trip_for_known_edges(self):
        for pts in (EDGE_A, EDGE_B, EDGE_C):
            q = edge_poly(NearEdge(pts)).maximal
            pc = p_basis_coefficients(q)
            alpha, d = min(pc), max(pc)
            counts = [
                catalan_pair_t(q.shift(r + 2)) for r in range(d - alpha + 1)
            ]
            assert recover_edge_poly_from_counts(counts, (alpha, d)) == q

    def test_validation(self):
        with pytest.raises(ValueError, match="alpha"):
            recover_edge_poly_from_counts((1,), (0, 0))
        with pytest.raises(ValueError, match="alpha"):
            recover_edge_poly_from_counts((1,), (3, 2))
        with pytest.raises(ValueError, match="needs 3 counts"):
            recover_edge_poly_from_counts((1, 2), (3, 5))


class TestRealize:
    def test_three_edge_gon_polynomial(self):
        cfg = realize(NearGon(gon_edges()))
        assert len(cfg) == 14
        assert len(cfg.extremal()) == 7
        assert complete_config_poly(cfg).c == GON_POLY
        assert max_config_count(cfg) == 194939

    def test_accepts_plain_edge_sequences(self):
        cfg = realize(gon_edges())
        assert order_type_stable(cfg)

    def test_needs_three_edges(self):
        with pytest.raises(ValueError, match="three edges"):
            realize((NearEdge(EDGE_A), NearEdge(EDGE_B)))

    def test_unit_triangle(self):
        unit = straight_edge(1)
        cfg = realize((unit, unit, unit))
        assert len(cfg) == 3
        assert complete_config_poly(cfg).c == {3: 1}

    def test_straight_gon_matches_weighted_realization(self):
        cfg = realize([straight_edge(a) for a in (2, 3, 2)])
        assert complete_config_poly(cfg).c == weighted_complete_poly((2, 3, 2)).c


def order_type_stable(cfg):
    from tripoly.planar import order_type_equivalent

    again = realize(gon_edges())
    return order_type_equivalent(cfg.points, again.points)
