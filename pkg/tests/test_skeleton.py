import itertools

import pytest

from nscrush import perms
from nscrush.library import doubled_tet, search_closed
from nscrush.skeleton import (compute_skeleton, euler_characteristic,
                              is_connected, validate)
from nscrush.triangulation import Triangulation


def brute_force_corner_orbits(tri):
    """Independent oracle: grow corner orbits by repeated sweeps over
    the gluing maps until nothing merges."""
    orbits = {(i, v): {(i, v)} for i in range(tri.n) for v in range(4)}
    changed = True
    while changed:
        changed = False
        for i in range(tri.n):
            for f in range(4):
                rec = tri.gluing(i, f)
                if rec is None:
                    continue
                j, _, p = rec
                for v in range(4):
                    if v == f:
                        continue
                    a, b = orbits[(i, v)], orbits[(j, p[v])]
                    if a is not b:
                        merged = a | b
                        for c in merged:
                            orbits[c] = merged
                        changed = True
    return {frozenset(o) for o in orbits.values()}


def test_doubled_tet_orbits_match_brute_force(double):
    sk = compute_skeleton(double)
    assert {frozenset(c) for c in sk.vertex_classes} == \
        brute_force_corner_orbits(double)
    assert len(sk.vertex_classes) == 4
    assert len(sk.edge_classes) == 6
    assert all(sk.edge_degree(k) == 2 for k in range(6))
    assert len(sk.face_classes) == 4
    assert sk.closed


def test_single_tet_skeleton(single_tet):
    sk = compute_skeleton(single_tet)
    assert len(sk.vertex_classes) == 4
    assert len(sk.edge_classes) == 6
    assert all(sk.edge_degree(k) == 1 for k in range(6))
    assert len(sk.boundary_faces) == 4
    assert not sk.closed


def test_empty_skeleton():
    sk = compute_skeleton(Triangulation(0, {}))
    assert sk.counts() == (0, 0, 0)
    assert sk.closed


def test_incidence_count_sums(double, three_tet, s2xs1):
    for tri in (double, three_tet, s2xs1):
        sk = compute_skeleton(tri)
        assert sum(len(c) for c in sk.vertex_classes) == 4 * tri.n
        assert sum(len(c) for c in sk.edge_classes) == 6 * tri.n


def test_euler_characteristic_values(double, single_tet):
    assert euler_characteristic(double) == 0
    assert euler_characteristic(single_tet) == 1
    assert euler_characteristic(Triangulation(0, {})) == 0


def test_validate_doubled_tet(double):
    report = validate(double)
    assert report.orientable and report.closed and report.edge_valid
    assert report.vertex_link_types == ("sphere",) * 4
    assert report.ok


def test_validate_single_tet(single_tet):
    report = validate(single_tet)
    assert report.orientable and not report.closed
    assert report.vertex_link_types == ("disk",) * 4
    assert report.is_manifold


def brute_force_parity(tri):
    """Independent orientability oracle: try both labels for every
    tetrahedron explicitly (feasible for tiny complexes)."""
    n = tri.n
    for labels in itertools.product((1, -1), repeat=n):
        ok = True
        for i in range(n):
            for f in range(4):
                rec = tri.gluing(i, f)
                if rec is None:
                    continue
                j, _, p = rec
                want = labels[i] * (1 if perms.sign(p) < 0 else -1)
                if labels[j] != want:
                    ok = False
        if ok:
            return True
    return n == 0


def test_single_odd_gluing_is_orientable():
    # two tets glued along one face by an odd permutation, rest boundary
    tri = Triangulation(2, {(0, 0): (1, (1, 0, 2, 3))})
    report = validate(tri)
    assert report.orientable
    assert brute_force_parity(tri)


def test_single_even_gluing_parity():
    tri = Triangulation(2, {(0, 0): (1, (0, 1, 3, 2))})
    # odd permutation again (one transposition): orientable
    assert validate(tri).orientable == brute_force_parity(tri)


def test_orientability_matches_brute_force_on_fixtures(
        double, s2xs1, three_tet):
    for tri in (double, s2xs1, three_tet):
        assert validate(tri).orientable == brute_force_parity(tri)


def test_orientability_invariant_under_relabelling(double, s2xs1):
    for tri in (double, s2xs1):
        verdict = validate(tri).orientable
        tet_map = {i: (i + 1) % tri.n for i in range(tri.n)}
        vmaps = {i: (2, 0, 3, 1) if i % 2 else (1, 2, 3, 0)
                 for i in range(tri.n)}
        moved = tri.relabelled(tet_map, vmaps)
        assert validate(moved).orientable == verdict
        assert euler_characteristic(moved) == euler_characteristic(tri)


def test_is_connected(double):
    assert is_connected(double)
    assert is_connected(Triangulation(0, {}))
    assert not is_connected(Triangulation(2, {}))


def test_nonmanifold_link_detected():
    # Two tets glued along two faces such that a vertex link fails:
    # search for any complex rejected by the validator to make sure the
    # failure list is populated.
    tri = Triangulation(
        2, {(0, 0): (1, perms.IDENTITY), (0, 1): (1, (3, 1, 0, 2))})
    report = validate(tri)
    if not report.is_manifold:
        assert report.failures
