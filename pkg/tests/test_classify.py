import random

import pytest

from crosspoly.catalog import (
    d_polytope,
    del_pezzo,
    free_sum,
    ones_row_wirth,
    pseudo_del_pezzo,
    segment,
)
from crosspoly.classify import (
    Decomposition,
    DecompositionError,
    canonical_form,
    classify,
    classify_smooth,
    compose,
    decompose,
    dual_embedding_bound,
    embed_in_cube,
    is_isomorphic,
    pseudo_frame,
    verify_theorems,
    wirth_basis,
)
from crosspoly.linalg import IntMatrix, is_unimodular
from crosspoly.polytope import LatticePolytope, from_vertices
from crosspoly.wirth import equivalent, validate

from reference_data import CLASS_COUNTS, SEVEN_VERTEX_4D, SMOOTH_CLASS_COUNTS


from helpers import random_unimodular, transform


def crosspolytope(d):
    cols = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        cols.append(tuple(e))
        cols.append(tuple(-x for x in e))
    return from_vertices(d, cols)


class TestPseudoFrame:
    def test_hexagon_frame(self):
        p = del_pezzo(2)
        facet = next(f for f, _ in [(f, None) for f in p.facets]
                     if set(p.facet_vertices(f)) == {(1, 0), (1, 1)})
        frame = pseudo_frame(p, facet)
        assert len(frame.index_pairs) == 2
        for i_set, j_set in frame.index_pairs:
            assert len(i_set) == len(j_set) == 1

    def test_square_frame_has_no_kernel_vertices(self):
        p = crosspolytope(2)
        frame = pseudo_frame(p, p.facets[0])
        assert frame.index_pairs == ()
        for i in range(2):
            assert frame.opposite_vertices[i] == tuple(-x for x in frame.basis[i])

    def test_mixed_free_sum_frame(self):
        p = free_sum(del_pezzo(2), segment())
        facet = p.facets[0]
        frame = pseudo_frame(p, facet)
        assert len(frame.index_pairs) in (1, 2)  # hexagon block contributes pairs

    def test_rejects_facet_without_negative(self):
        p = pseudo_del_pezzo(2)
        bad = next(
            f
            for f in p.facets
            if {tuple(-x for x in v) for v in p.facet_vertices(f)}
            not in [set(p.facet_vertices(g)) for g in p.facets]
        )
        with pytest.raises(DecompositionError):
            pseudo_frame(p, bad)

    def test_rejects_non_simplicial(self):
        cube3 = from_vertices(
            3, [(sx, sy, sz) for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)]
        )
        with pytest.raises(DecompositionError):
            pseudo_frame(cube3, cube3.facets[0])


class TestWirthBasis:
    def test_square(self):
        p = crosspolytope(2)
        basis = wirth_basis(pseudo_frame(p, p.facets[0]))
        assert basis.wirth.f == 0
        assert is_unimodular(basis.u_map)

    def test_d2(self):
        p = d_polytope(2)
        basis = wirth_basis(pseudo_frame(p, p.facets[0]))
        assert equivalent(basis.wirth, ones_row_wirth(2))

    def test_literal_transform_equality(self):
        for p in (d_polytope(2), d_polytope(3), free_sum(d_polytope(2), del_pezzo(2))):
            frame = pseudo_frame(p, p.facets[0])
            basis = wirth_basis(frame)
            assembled = basis.wirth.assembled()
            for k, direction in enumerate(basis.column_directions):
                image = basis.u_map.apply(frame.basis[direction])
                assert image == assembled.column(k)

    def test_unit_rows_at_del_pezzo_block(self):
        p = free_sum(d_polytope(2), del_pezzo(2))
        frame = pseudo_frame(p, p.facets[0])
        basis = wirth_basis(frame)
        a = basis.wirth.assembled()
        kernel_dirs = set()
        for i_set, j_set in frame.index_pairs:
            kernel_dirs |= set(i_set) | set(j_set)
        pos = {direction: k for k, direction in enumerate(basis.column_directions)}
        for direction in kernel_dirs:
            k = pos[direction]
            assert a.row(k) == tuple(1 if j == k else 0 for j in range(4))


class TestDecompose:
    def test_hexagon(self):
        dec = decompose(del_pezzo(2))
        assert dec == Decomposition(dim=2, core=None, segments=0,
                                    del_pezzo=(2,), pseudo_del_pezzo=())

    def test_pentagon(self):
        dec = decompose(pseudo_del_pezzo(2))
        assert dec == Decomposition(dim=2, core=None, segments=0,
                                    del_pezzo=(), pseudo_del_pezzo=(2,))

    def test_crosspolytope_is_segments(self):
        dec = decompose(crosspolytope(4))
        assert dec == Decomposition(dim=4, core=None, segments=4,
                                    del_pezzo=(), pseudo_del_pezzo=())

    def test_segment(self):
        dec = decompose(segment())
        assert dec == Decomposition(dim=1, core=None, segments=1,
                                    del_pezzo=(), pseudo_del_pezzo=())

    def test_mixed_free_sum(self):
        p = free_sum(pseudo_del_pezzo(2), segment(), d_polytope(2))
        dec = decompose(p)
        assert dec.segments == 1
        assert dec.pseudo_del_pezzo == (2,)
        assert dec.del_pezzo == ()
        assert dec.core is not None
        assert equivalent(dec.core, ones_row_wirth(2))

    def test_higher_del_pezzo(self):
        assert decompose(del_pezzo(4)).del_pezzo == (4,)
        assert decompose(pseudo_del_pezzo(4)).pseudo_del_pezzo == (4,)

    def test_pair_independence(self):
        for p in (del_pezzo(2), free_sum(del_pezzo(2), segment()),
                  d_polytope(3), free_sum(pseudo_del_pezzo(2), d_polytope(2))):
            decompose(p, check_all_pairs=True)

    def test_rejects_non_pseudo_symmetric(self):
        with pytest.raises(DecompositionError):
            decompose(from_vertices(4, SEVEN_VERTEX_4D))

    def test_transformed_input(self):
        rng = random.Random(7)
        p = free_sum(del_pezzo(2), d_polytope(2))
        base = decompose(p)
        for _ in range(5):
            q = transform(p, random_unimodular(4, rng))
            assert decompose(q) == base


class TestCompose:
    def test_two_segments_is_square(self):
        dec = Decomposition(dim=2, core=None, segments=2, del_pezzo=(), pseudo_del_pezzo=())
        assert compose(dec) == crosspolytope(2)

    def test_two_hexagons(self):
        dec = Decomposition(dim=4, core=None, segments=0, del_pezzo=(2, 2), pseudo_del_pezzo=())
        p = compose(dec)
        assert p.n_vertices == 12
        assert len(p.facets) == 36

    def test_core_only(self):
        dec = Decomposition(dim=3, core=ones_row_wirth(3), segments=0,
                            del_pezzo=(), pseudo_del_pezzo=())
        assert compose(dec).f_vector() == (6, 12, 8)

    def test_roundtrip_d_le_4(self):
        for d in (1, 2, 3, 4):
            for dec in classify(d):
                assert decompose(compose(dec)) == dec


class TestClassify:
    @pytest.mark.parametrize("d", sorted(CLASS_COUNTS))
    def test_counts(self, d):
        assert len(classify(d)) == CLASS_COUNTS[d]

    @pytest.mark.parametrize("d", sorted(SMOOTH_CLASS_COUNTS))
    def test_smooth_counts(self, d):
        assert len(classify_smooth(d)) == SMOOTH_CLASS_COUNTS[d]

    def test_smooth_subfamily(self):
        for dec in classify_smooth(4):
            assert dec.core is None
            assert compose(dec).is_smooth_fano()

    def test_core_classes_are_singular(self):
        for dec in classify(4):
            if dec.core is not None:
                assert not compose(dec).is_smooth_fano()

    def test_d4_contains_expected_smooth_multisets(self):
        smooth = classify_smooth(4)
        assert Decomposition(dim=4, core=None, segments=0, del_pezzo=(2,),
                             pseudo_del_pezzo=(2,)) in smooth
        assert Decomposition(dim=4, core=None, segments=0, del_pezzo=(),
                             pseudo_del_pezzo=(4,)) in smooth

    def test_d2_classes(self):
        classes = classify(2)
        assert Decomposition(dim=2, core=None, segments=2, del_pezzo=(), pseudo_del_pezzo=()) in classes
        assert Decomposition(dim=2, core=None, segments=0, del_pezzo=(2,), pseudo_del_pezzo=()) in classes
        assert Decomposition(dim=2, core=None, segments=0, del_pezzo=(), pseudo_del_pezzo=(2,)) in classes

    def test_range_checked(self):
        with pytest.raises(ValueError):
            classify(0)
        with pytest.raises(ValueError):
            classify(9)

    def test_deterministic(self):
        assert classify(4) == classify(4)

    def test_json_roundtrip(self):
        for dec in classify(3):
            assert Decomposition.from_dict(dec.to_dict()) == dec


class TestCanonicalForm:
    def test_invariant_under_transform(self):
        rng = random.Random(20240809)
        p = del_pezzo(2)
        base = canonical_form(p)
        for _ in range(10):
            q = transform(p, random_unimodular(2, rng))
            assert canonical_form(q).matrix == base.matrix

    def test_d2_differs_from_square(self):
        assert canonical_form(d_polytope(2)).matrix != canonical_form(crosspolytope(2)).matrix

    def test_isomorphic(self):
        p = free_sum(del_pezzo(2), pseudo_del_pezzo(2))
        q = free_sum(pseudo_del_pezzo(2), del_pezzo(2))
        assert is_isomorphic(p, q)
        assert is_isomorphic(p, p)

    def test_distinct_d4_cores(self):
        from crosspoly.wirth import enumerate_one_minimal, polytope_from_wirth

        reps = enumerate_one_minimal(4)
        polys = [polytope_from_wirth(w) for w in reps]
        for i, a in enumerate(polys):
            for b in polys[i + 1 :]:
                assert not is_isomorphic(a, b)

    def test_dimension_mismatch_is_false(self):
        assert not is_isomorphic(segment(), crosspolytope(2))

    def test_d3_classes_distinct(self):
        forms = [canonical_form(compose(dec)).matrix for dec in classify(3)]
        assert len({f.entries for f in forms}) == len(forms)

    def test_non_simplicial_rejected(self):
        cube3 = from_vertices(
            3, [(sx, sy, sz) for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)]
        )
        with pytest.raises(ValueError):
            canonical_form(cube3)


class TestEmbedding:
    def test_d2_embeds(self):
        u = embed_in_cube(d_polytope(2))
        assert is_unimodular(u)
        images = {u.apply(v) for v in d_polytope(2).vertex_columns}
        assert images == {(1, 1), (-1, -1), (-1, 1), (1, -1)}

    def test_del_pezzo_embeds_trivially(self):
        u = embed_in_cube(del_pezzo(4))
        assert is_unimodular(u)
        for v in del_pezzo(4).vertex_columns:
            assert all(x in (-1, 0, 1) for x in u.apply(v))

    def test_d3s_embed(self):
        for p in (d_polytope(3), free_sum(d_polytope(2), segment()),
                  free_sum(del_pezzo(2), segment())):
            u = embed_in_cube(p)
            assert is_unimodular(u)
            for v in p.vertex_columns:
                assert all(x in (-1, 0, 1) for x in u.apply(v))

    def test_transformed_input_embeds(self):
        rng = random.Random(11)
        p = d_polytope(3)
        for _ in range(5):
            q = transform(p, random_unimodular(3, rng))
            u = embed_in_cube(q)
            for v in q.vertex_columns:
                assert all(x in (-1, 0, 1) for x in u.apply(v))

    def test_dual_bound_d2(self):
        assert dual_embedding_bound(d_polytope(2)) == (1, 1)

    def test_dual_bound_hexagon(self):
        assert dual_embedding_bound(del_pezzo(2)) == (1, 1)

    def test_dual_bound_d4(self):
        bound, attained = dual_embedding_bound(d_polytope(4))
        assert bound == 2
        assert attained <= 2


class TestVerifyTheorems:
    def test_maximal_vertex_class(self):
        p = free_sum(del_pezzo(2), del_pezzo(2), del_pezzo(2))
        report = verify_theorems(p)
        assert report.passed
        by_name = {c.name: c for c in report.checks}
        assert by_name["vertex_count"].measured == 18
        assert by_name["vertex_count"].equality
        assert by_name["facet_count"].measured == 216
        assert by_name["facet_count"].equality

    def test_d5_lattice_maximum(self):
        report = verify_theorems(d_polytope(5))
        by_name = {c.name: c for c in report.checks}
        assert by_name["lattice_point_count"].measured == 51
        assert by_name["lattice_point_count"].equality
        assert by_name["facet_lattice_points"].equality
        assert report.passed

    def test_odd_dimension_vertex_maximum(self):
        p = free_sum(segment(), del_pezzo(2), del_pezzo(2))
        report = verify_theorems(p)
        by_name = {c.name: c for c in report.checks}
        assert by_name["vertex_count"].measured == 14 == 3 * 5 - 1
        assert by_name["vertex_count"].equality
        assert report.passed

    def test_precondition(self):
        with pytest.raises(DecompositionError):
            verify_theorems(from_vertices(4, SEVEN_VERTEX_4D))
