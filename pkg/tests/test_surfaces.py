import pytest

from nscrush.errors import AdmissibilityError
from nscrush.skeleton import compute_skeleton
from nscrush.surfaces import (all_links_vector, build_piece_complex, classify,
                              components, euler_weighted, format_vector,
                              is_admissible, is_nontrivial_sphere,
                              matching_system, parse_vector, quad_col,
                              sep_of_pair, sep_partner, sep_side, tri_col,
                              vertex_link_vector, zero_vector)


def quad_pair(double, s=0):
    x = [0] * 14
    x[quad_col(0, s)] = 1
    x[quad_col(1, s)] = 1
    return tuple(x)


def test_separation_tables():
    assert sep_of_pair(0, 1) == sep_of_pair(2, 3) == 0
    assert sep_of_pair(0, 2) == sep_of_pair(1, 3) == 1
    assert sep_of_pair(0, 3) == sep_of_pair(1, 2) == 2
    assert sep_partner(0, 0) == 1 and sep_partner(0, 2) == 3
    assert sep_side(1, 0) == 0 and sep_side(1, 1) == 1


def test_matching_system_shape(double, single_tet):
    ms = matching_system(double)
    assert len(ms.rows) == 12
    assert ms.ncols == 14
    ms1 = matching_system(single_tet)
    assert len(ms1.rows) == 0 and ms1.ncols == 7


def test_matching_rows_balanced(double, s2xs1, three_tet):
    # each row sums to zero with at most two entries of each sign;
    # when all four columns are distinct the split is exactly 2/2
    for tri in (double, s2xs1, three_tet):
        for row in matching_system(tri).rows:
            coeffs = [k for _c, k in row]
            assert sum(coeffs) == 0
            assert all(abs(k) <= 1 for k in coeffs)
            if len(row) == 4:
                assert sorted(coeffs) == [-1, -1, 1, 1]


def test_quad_pair_satisfies_matching(double):
    ms = matching_system(double)
    assert ms.satisfied_by(quad_pair(double))
    dense = ms.dense()
    assert all(len(r) == 14 for r in dense)


def test_admissibility(double):
    assert is_admissible(double, zero_vector(double))
    sk = compute_skeleton(double)
    for cls in sk.vertex_classes:
        assert is_admissible(double, vertex_link_vector(double, cls))
    assert is_admissible(double, quad_pair(double))
    bad = [0] * 14
    bad[quad_col(0, 0)] = 1
    bad[quad_col(0, 1)] = 1
    assert not is_admissible(double, tuple(bad))
    lonely = [0] * 14
    lonely[quad_col(0, 0)] = 1
    assert not is_admissible(double, tuple(lonely))
    with pytest.raises(ValueError):
        is_admissible(double, (0,) * 13)


def test_all_links_always_admissible(double, s2xs1, three_tet, single_tet):
    for tri in (double, s2xs1, three_tet, single_tet):
        assert is_admissible(tri, all_links_vector(tri))


def test_quad_pair_piece_complex(double):
    pc = build_piece_complex(double, quad_pair(double))
    assert len(pc.pieces) == 2
    assert len(pc.arcs) == 4
    assert len(pc.points) == 4
    assert pc.euler() == 2
    assert pc.closed


def test_vertex_link_piece_complex(double):
    sk = compute_skeleton(double)
    link = vertex_link_vector(double, sk.vertex_classes[0])
    pc = build_piece_complex(double, link)
    assert len(pc.pieces) == 2
    assert len(pc.arcs) == 3
    assert len(pc.points) == 3
    assert pc.euler() == 2


def test_empty_vector_complex(double):
    pc = build_piece_complex(double, zero_vector(double))
    assert len(pc.pieces) == 0 and len(pc.arcs) == 0 and len(pc.points) == 0


def test_classify_quad_pair(double):
    cls = classify(double, quad_pair(double))
    assert cls.kind == "sphere"
    assert cls.connected and not cls.vertex_linking and cls.euler == 2
    assert is_nontrivial_sphere(cls)


def test_classify_vertex_link(double):
    sk = compute_skeleton(double)
    cls = classify(double, vertex_link_vector(double, sk.vertex_classes[0]))
    assert cls.kind == "sphere" and cls.vertex_linking
    assert not is_nontrivial_sphere(cls)


def test_two_links_disconnect(double):
    sk = compute_skeleton(double)
    a = vertex_link_vector(double, sk.vertex_classes[0])
    b = vertex_link_vector(double, sk.vertex_classes[1])
    both = tuple(x + y for x, y in zip(a, b))
    cls = classify(double, both)
    assert not cls.connected
    parts = components(double, both)
    assert sorted(parts) == sorted([a, b])
    assert tuple(sum(col) for col in zip(*parts)) == both
    for part in parts:
        assert classify(double, part).connected


def test_classify_rejects_inadmissible(double):
    bad = [0] * 14
    bad[quad_col(0, 0)] = 1
    bad[quad_col(0, 1)] = 1
    with pytest.raises(AdmissibilityError):
        classify(double, tuple(bad))


def test_euler_two_routes_agree(double, s2xs1, three_tet):
    from nscrush.enumeration import brute_force_solutions
    for tri in (double, s2xs1, three_tet):
        for x in brute_force_solutions(tri, 1):
            if not any(x):
                continue
            assert build_piece_complex(tri, x).euler() == \
                euler_weighted(tri, x)


def test_boundary_surface_classification(single_tet):
    # one triangle in a lone tetrahedron: a disk
    x = [0] * 7
    x[tri_col(0, 0)] = 1
    cls = classify(single_tet, tuple(x))
    assert cls.kind == "disk" and cls.euler == 1 and not cls.connected is None
    # one quad: also a disk
    q = [0] * 7
    q[quad_col(0, 0)] = 1
    cls2 = classify(single_tet, tuple(q))
    assert cls2.kind == "disk" and cls2.euler == 1


def test_vector_text_round_trip(double):
    x = quad_pair(double)
    assert parse_vector(format_vector(x), 2) == x
    with pytest.raises(ValueError):
        parse_vector("1 2 3", 2)


def test_vertex_linking_characterizations(double, s2xs1):
    # connected + quad-free == equals some canonical link vector
    from nscrush.enumeration import brute_force_solutions
    for tri in (double, s2xs1):
        sk = compute_skeleton(tri)
        links = {vertex_link_vector(tri, cls) for cls in sk.vertex_classes}
        for x in brute_force_solutions(tri, 1):
            if not any(x):
                continue
            cls = classify(tri, x)
            if not cls.connected:
                continue
            quad_free = all(
                x[quad_col(i, s)] == 0 for i in range(tri.n)
                for s in range(3))
            assert cls.vertex_linking == quad_free
            if quad_free:
                assert x in links
