from math import comb

import pytest

from crosspoly.catalog import (
    FanoFactor,
    cube,
    d_polytope,
    del_pezzo,
    dual_of_d_polytope,
    facet_count_del_pezzo,
    facet_count_pseudo_del_pezzo,
    free_sum,
    ones_row_wirth,
    pseudo_del_pezzo,
    segment,
)
from crosspoly.wirth import equivalent, reduce, wirth_from_crosspolytope


class TestBasicShapes:
    def test_segment(self):
        assert set(segment().vertex_columns) == {(1,), (-1,)}

    def test_cube2(self):
        c = cube(2)
        assert c.n_vertices == 4
        assert len(c.facets) == 4

    def test_cube3(self):
        c = cube(3)
        assert not c.is_simplicial()
        assert c.is_reflexive()

    def test_cube_bad_dim(self):
        with pytest.raises(ValueError):
            cube(0)


class TestDelPezzoFamilies:
    def test_hexagon(self):
        p = del_pezzo(2)
        assert p.n_vertices == 6
        assert len(p.facets) == 6
        assert p.is_smooth_fano()

    def test_pentagon(self):
        p = pseudo_del_pezzo(2)
        assert p.n_vertices == 5
        assert len(p.facets) == 5
        assert p.is_smooth_fano()

    def test_del_pezzo_4(self):
        p = del_pezzo(4)
        assert p.n_vertices == 10
        assert len(p.facets) == 30
        assert p.is_centrally_symmetric()

    def test_odd_dimension_rejected(self):
        for k in (1, 3, -2):
            with pytest.raises(ValueError):
                del_pezzo(k)
            with pytest.raises(ValueError):
                pseudo_del_pezzo(k)

    @pytest.mark.parametrize("k,expected", [(2, 6), (4, 30), (6, 140)])
    def test_facet_count_formula(self, k, expected):
        assert facet_count_del_pezzo(k) == expected

    @pytest.mark.parametrize("k,expected", [(2, 5), (4, 23)])
    def test_pseudo_facet_count_formula(self, k, expected):
        assert facet_count_pseudo_del_pezzo(k) == expected

    def test_formulas_match_bruteforce(self):
        for k in (2, 4):
            assert len(del_pezzo(k).facets) == facet_count_del_pezzo(k)
            assert len(pseudo_del_pezzo(k).facets) == facet_count_pseudo_del_pezzo(k)
        assert len(del_pezzo(6).facets) == facet_count_del_pezzo(6)

    def test_facet_bound_inequality_chain(self):
        # 2n*C(2n-1,n) + sum_{i=n}^{2n} C(2n,i) < (2n+1)*C(2n,n) <= 6^n,
        # with equality at the right only for n = 1
        for n in range(1, 5):
            pseudo = 2 * n * comb(2 * n - 1, n) + sum(comb(2 * n, i) for i in range(n, 2 * n + 1))
            full = (2 * n + 1) * comb(2 * n, n)
            assert pseudo < full <= 6**n
            assert (full == 6**n) == (n == 1)

    def test_del_pezzo_facet_sign_structure(self):
        # facets drop one direction and take exactly half positive signs
        for k in (2, 4):
            p = del_pezzo(k)
            basis = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
            directions = basis + [(-1,) * k]  # e_0 is the negative sum
            for facet in p.facets:
                verts = set(p.facet_vertices(facet))
                used = []
                positives = 0
                for direction in directions:
                    negated = tuple(-x for x in direction)
                    if direction in verts:
                        used.append(direction)
                        positives += 1
                    elif negated in verts:
                        used.append(negated)
                assert len(used) == k
                assert positives == k // 2

    def test_smooth_fano_family_flags(self):
        for k in (2, 4):
            assert del_pezzo(k).is_smooth_fano()
            assert pseudo_del_pezzo(k).is_smooth_fano()
        for d in (2, 3, 4):
            assert not d_polytope(d).is_smooth_fano()


class TestDPolytope:
    def test_lattice_point_maxima(self):
        assert d_polytope(2).lattice_points().total == 9
        assert d_polytope(4).lattice_points().total == 33

    def test_facet_lattice_points_d3(self):
        p = d_polytope(3)
        report = p.lattice_points()
        for facet in p.facets:
            assert p.facet_lattice_point_count(facet, report) == comb(4, 2)

    def test_f_vector_is_octahedral(self):
        assert d_polytope(3).f_vector() == (6, 12, 8)

    def test_small_dim_rejected(self):
        with pytest.raises(ValueError):
            d_polytope(1)


class TestDualOfDPolytope:
    def test_d2_vertices(self):
        q = dual_of_d_polytope(2)
        assert set(q.vertex_columns) == {(0, 1), (0, -1), (-1, 1), (1, -1)}
        assert q == d_polytope(2).dual()

    def test_equals_dual_literally(self):
        for d in (2, 3, 4):
            assert dual_of_d_polytope(d) == d_polytope(d).dual()

    def test_boundary_points_are_vertices_only(self):
        for d in (2, 3):
            q = dual_of_d_polytope(d)
            report = q.lattice_points()
            assert report.boundary == q.n_vertices == 2**d


class TestFreeSum:
    def test_two_segments_make_square(self):
        p = free_sum(segment(), segment())
        assert set(p.vertex_columns) == {(1, 0), (-1, 0), (0, 1), (0, -1)}

    def test_two_hexagons(self):
        p = free_sum(del_pezzo(2), del_pezzo(2))
        assert p.dim == 4
        assert p.n_vertices == 12
        assert len(p.facets) == 36

    def test_facet_count_is_multiplicative(self):
        parts = [del_pezzo(2), pseudo_del_pezzo(2), segment()]
        p = free_sum(*parts)
        expected = 1
        for part in parts:
            expected *= len(part.facets)
        assert len(p.facets) == expected

    def test_d2_plus_segment_roundtrip(self):
        p = free_sum(d_polytope(2), segment())
        assert p.dim == 3
        assert p.n_vertices == 6
        assert p.is_reflexive()
        got, _ = wirth_from_crosspolytope(p, p.facets[0])
        red = reduce(got)
        assert red.r == 1
        assert equivalent(red.core, ones_row_wirth(2))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            free_sum()


class TestFanoFactor:
    def test_dims(self):
        assert FanoFactor("segment").dim == 1
        assert FanoFactor("del_pezzo", 4).dim == 4
        assert FanoFactor("cs_cross", core=ones_row_wirth(3)).dim == 3

    def test_build(self):
        assert FanoFactor("pseudo_del_pezzo", 2).build() == pseudo_del_pezzo(2)
        assert FanoFactor("cs_cross", core=ones_row_wirth(2)).build() == d_polytope(2)

    def test_invalid(self):
        with pytest.raises(ValueError):
            FanoFactor("del_pezzo", 3)
        with pytest.raises(ValueError):
            FanoFactor("nonsense")
