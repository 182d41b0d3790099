"""Simplex and H-polytope geometry: weights, normals, nu, polarity."""

import random
from fractions import Fraction as F

import pytest

from polyspec import (
    DegenerateSimplex,
    HPolytope,
    InvalidInput,
    OriginNotInterior,
    Simplex,
    WeightVector,
    origin_barycentric,
)

from conftest import (
    BIG_TRIANGLE,
    CROSS_FACETS,
    CROSS_VERTICES,
    SIMPLEX_3D,
    SIMPLEX_4D,
    SIMPLEX_9D,
    SKEW_TRIANGLE,
    STD_TRIANGLE,
)


class TestWeightVector:
    def test_positive_entries_required(self):
        with pytest.raises(InvalidInput):
            WeightVector((1, 0, 2))

    def test_milnor_is_sum(self):
        assert WeightVector((1, 1, 2)).milnor == 4
        assert WeightVector((2, 2, 3, 4)).milnor == 11
        assert WeightVector((1,) * 9 + (3,)).milnor == 12

    def test_is_reduced(self):
        assert WeightVector((1, 1, 2)).is_reduced
        assert not WeightVector((4, 4, 4)).is_reduced
        assert WeightVector((2, 2, 3, 4)).is_reduced


class TestSimplexWeights:
    def test_skew_triangle(self, simplex_skew):
        # Per-vertex weights; the multiset is {1, 1, 2}.
        assert simplex_skew.weight.q == (1, 2, 1)
        assert sorted(simplex_skew.weight.q) == [1, 1, 2]

    def test_3d_simplex(self, simplex_3d):
        assert sorted(simplex_3d.weight.q) == [2, 2, 3, 4]

    def test_4d_simplex(self, simplex_4d):
        assert sorted(simplex_4d.weight.q) == [1, 1, 1, 1, 5]

    def test_big_triangle(self, simplex_big):
        assert simplex_big.weight.q == (4, 4, 4)

    def test_9d_simplex(self, simplex_9d):
        assert sorted(simplex_9d.weight.q) == [1] * 9 + [3]
        assert simplex_9d.weight.milnor == 12

    @pytest.mark.parametrize(
        "vertices", [STD_TRIANGLE, SKEW_TRIANGLE, BIG_TRIANGLE, SIMPLEX_3D, SIMPLEX_4D, SIMPLEX_9D]
    )
    def test_weights_balance_vertices(self, vertices):
        simplex = Simplex(vertices)
        n = simplex.dim
        for d in range(n):
            assert sum(q * v[d] for q, v in zip(simplex.weight.q, simplex.vertices)) == 0

    @pytest.mark.parametrize(
        "vertices", [STD_TRIANGLE, SKEW_TRIANGLE, SIMPLEX_3D, SIMPLEX_4D]
    )
    def test_barycentric_equals_weight_over_milnor(self, vertices):
        simplex = Simplex(vertices)
        mu = simplex.weight.milnor
        assert simplex.barycentric == tuple(F(q, mu) for q in simplex.weight.q)


class TestOriginBarycentric:
    def test_symmetric_triangle(self):
        assert origin_barycentric(STD_TRIANGLE) == (F(1, 3), F(1, 3), F(1, 3))

    def test_skew_triangle(self):
        assert origin_barycentric(SKEW_TRIANGLE) == (F(1, 4), F(1, 2), F(1, 4))

    def test_origin_outside_gives_nonpositive_entry(self):
        bary = origin_barycentric(((1, 0), (0, 1), (1, 1)))
        assert any(x <= 0 for x in bary)

    def test_degenerate_raises(self):
        with pytest.raises(DegenerateSimplex):
            origin_barycentric(((1, 0), (2, 0), (3, 0)))


class TestSimplexValidation:
    def test_origin_on_boundary_rejected(self):
        with pytest.raises(OriginNotInterior):
            Simplex(((1, 0), (0, 1), (-1, 0)))

    def test_origin_outside_rejected(self):
        # The vertex (2, 2) puts the whole triangle in the positive
        # quadrant, so there is no interior origin.
        with pytest.raises(OriginNotInterior):
            Simplex(((2, 0), (0, 2), (2, 2)))

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateSimplex):
            Simplex(((1, 0), (-1, 0), (2, 0)))

    def test_wrong_vertex_count_rejected(self):
        with pytest.raises(InvalidInput):
            Simplex(((1, 0), (0, 1)))

    def test_non_integer_vertex_rejected(self):
        with pytest.raises(InvalidInput):
            Simplex(((1.5, 0), (0, 1), (-1, -1)))


class TestFacetNormals:
    def test_std_triangle_normals(self, simplex_std):
        normals = set(simplex_std.hrep.facet_normals)
        assert normals == {(F(-2), F(1)), (F(1), F(-2)), (F(1), F(1))}

    def test_4d_facet_omitting_far_vertex(self, simplex_4d):
        assert (F(1), F(1), F(1), F(1)) in simplex_4d.hrep.facet_normals

    def test_4d_has_denominator_five(self, simplex_4d):
        assert (F(1), F(1), F(1), F(-4, 5)) in simplex_4d.hrep.facet_normals
        assert simplex_4d.hrep.common_denominator == 5

    def test_big_triangle_normals_not_integral(self, simplex_big):
        normals = set(simplex_big.hrep.facet_normals)
        assert normals == {(F(1, 2), F(1, 2)), (F(1, 2), F(-1)), (F(-1), F(1, 2))}

    @pytest.mark.parametrize(
        "vertices", [STD_TRIANGLE, SKEW_TRIANGLE, BIG_TRIANGLE, SIMPLEX_3D, SIMPLEX_4D]
    )
    def test_normals_define_opposite_facets(self, vertices):
        # Facet i satisfies <u_i, v_j> = 1 exactly for j != i, and strictly
        # less for the omitted vertex.
        simplex = Simplex(vertices)
        hp = simplex.hrep
        for i, u in enumerate(hp.facet_normals):
            for j, v in enumerate(simplex.vertices):
                value = sum((a * b for a, b in zip(u, v)), F(0))
                if i == j:
                    assert value < 1
                else:
                    assert value == 1


class TestNu:
    @pytest.mark.parametrize(
        "vertices", [STD_TRIANGLE, SKEW_TRIANGLE, BIG_TRIANGLE, SIMPLEX_3D, SIMPLEX_4D]
    )
    def test_vertices_have_nu_one(self, vertices):
        simplex = Simplex(vertices)
        for v in simplex.vertices:
            assert simplex.hrep.nu(v) == 1

    def test_origin_has_nu_zero(self, simplex_std):
        assert simplex_std.hrep.nu((0, 0)) == 0

    def test_known_value(self, simplex_std):
        assert simplex_std.hrep.nu((1, 1)) == 2

    def test_positive_homogeneity(self, simplex_3d):
        rng = random.Random(7)
        hp = simplex_3d.hrep
        for _ in range(50):
            v = tuple(rng.randint(-5, 5) for _ in range(3))
            base = hp.nu(v)
            for m in (0, 1, 2, 3):
                assert hp.nu(tuple(m * x for x in v)) == m * base

    def test_nu_vs_membership(self, simplex_3d):
        rng = random.Random(8)
        hp = simplex_3d.hrep
        for _ in range(100):
            v = tuple(rng.randint(-8, 8) for _ in range(3))
            m = rng.randint(0, 4)
            assert (hp.nu(v) <= m) == hp.contains(v, m)

    def test_nu_scaled_matches_nu(self, simplex_4d):
        hp = simplex_4d.hrep
        rng = random.Random(9)
        for _ in range(50):
            v = tuple(rng.randint(-6, 6) for _ in range(4))
            t, common = hp.nu_scaled(v)
            assert F(t, common) == hp.nu(v)


class TestPolarAndReflexive:
    def test_std_triangle_polar(self, simplex_std):
        polar = set(simplex_std.hrep.polar_vertices())
        assert polar == {(F(1), F(1)), (F(-2), F(1)), (F(1), F(-2))}

    def test_square_polar(self, cross_polytope):
        assert set(cross_polytope.polar_vertices()) == set(CROSS_FACETS)

    def test_big_triangle_polar_has_halves(self, simplex_big):
        assert (F(1, 2), F(1, 2)) in simplex_big.hrep.polar_vertices()

    def test_reflexive_cases(self, simplex_std, simplex_4d, simplex_9d, cross_polytope):
        assert simplex_std.hrep.is_reflexive
        assert not simplex_4d.hrep.is_reflexive
        assert simplex_9d.hrep.is_reflexive
        assert cross_polytope.is_reflexive


class TestHPolytopeValidation:
    def test_valid_square(self):
        hp = HPolytope(CROSS_FACETS, CROSS_VERTICES)
        assert hp.dim == 2

    def test_vertex_outside_halfspace(self):
        with pytest.raises(InvalidInput):
            HPolytope(CROSS_FACETS, CROSS_VERTICES + ((2, 0),))

    def test_facet_without_support(self):
        # A facet normal nothing touches.
        with pytest.raises(InvalidInput):
            HPolytope(CROSS_FACETS + ((F(1, 2), F(0)),), CROSS_VERTICES)

    def test_vertex_on_too_few_facets(self):
        # Interior lattice point listed as a vertex.
        with pytest.raises(InvalidInput):
            HPolytope(CROSS_FACETS, CROSS_VERTICES + ((0, 0),))

    def test_wrong_normal_length(self):
        with pytest.raises(InvalidInput):
            HPolytope(((F(1),),), CROSS_VERTICES)
