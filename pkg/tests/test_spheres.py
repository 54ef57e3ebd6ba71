import pytest

from nscrush.errors import InvalidTriangulationError
from nscrush.library import decomposition_corpus, doubled_tet, sphere_s3
from nscrush.spheres import (full_sphere_search, pattern_count,
                             restricted_sphere_search)
from nscrush.surfaces import classify, is_nontrivial_sphere, quad_support


def test_pattern_count_formula():
    for n in (1, 2, 5, 9):
        assert pattern_count(n, 2) == 3 * n + 9 * n * (n - 1) // 2
    assert pattern_count(0, 2) == 0
    assert pattern_count(4, 1) == 12


def test_restricted_finds_quad_pair(double):
    result = restricted_sphere_search(double)
    assert result.found
    assert result.mode == "restricted"
    assert result.enumerations == pattern_count(2, 2) == 15
    assert not result.supplement_fired
    cls = classify(double, result.sphere)
    assert is_nontrivial_sphere(cls)
    assert quad_support(result.sphere, 2) == (0, 1)
    assert set(quad_support(result.sphere, 2)) <= {t for t, _ in result.pattern}


def test_full_finds_sphere(double, s2xs1):
    for tri in (double, s2xs1):
        result = full_sphere_search(tri)
        assert result.found and result.mode == "full"
        assert is_nontrivial_sphere(classify(tri, result.sphere))


def test_empty_complex_absent():
    tri = sphere_s3()
    r = restricted_sphere_search(tri)
    assert not r.found and r.enumerations == 0
    assert not full_sphere_search(tri).found


def test_k1_misses_quad_pair_sphere(double):
    # the doubled tetrahedron's spheres need quads in both tetrahedra
    assert not restricted_sphere_search(double, 1).found
    assert restricted_sphere_search(double, 2).found


def test_k3_no_new_positives(zero_efficient_5):
    assert not restricted_sphere_search(zero_efficient_5, 2).found
    assert not restricted_sphere_search(zero_efficient_5, 3).found


def test_zero_efficient_fixture(zero_efficient_5):
    assert not full_sphere_search(zero_efficient_5).found


def test_requires_closed(single_tet):
    with pytest.raises(InvalidTriangulationError):
        restricted_sphere_search(single_tet)
    with pytest.raises(InvalidTriangulationError):
        full_sphere_search(single_tet)


def test_determinism(double):
    a = restricted_sphere_search(double)
    b = restricted_sphere_search(double)
    assert a == b


def test_work_counter_and_rows(double, three_tet):
    for tri in (double, three_tet):
        r = restricted_sphere_search(tri)
        assert r.enumerations == pattern_count(tri.n, 2)
        assert r.system_rows <= 6 * tri.n


@pytest.fixture(scope="session")
def small_corpus():
    return [(name, tri) for name, tri in decomposition_corpus()
            if tri.n <= 12]


def test_restricted_is_sound_shortcut(small_corpus):
    # wherever the restricted search finds a sphere, the full search
    # must find one too
    checked = 0
    for _name, tri in small_corpus:
        r = restricted_sphere_search(tri)
        if r.found:
            assert full_sphere_search(tri).found
            checked += 1
    assert checked > 0


def test_returned_spheres_classify(small_corpus):
    for _name, tri in small_corpus:
        r = restricted_sphere_search(tri)
        if not r.found:
            continue
        cls = classify(tri, r.sphere)
        assert cls.kind == "sphere" and cls.connected
        assert not cls.vertex_linking
        assert set(quad_support(r.sphere, tri.n)) <= \
            {t for t, _ in r.pattern}
