import pytest

from nscrush.casson import check_reducible_minimal, decompose
from nscrush.errors import DecompositionError, InvalidTriangulationError
from nscrush.homology import HomologyGroup, h1
from nscrush.library import (closed_fixture, connected_sum, doubled_tet,
                             sphere_s3)
from nscrush.spheres import full_sphere_search, pattern_count
from nscrush.surfaces import classify, is_nontrivial_sphere, quad_support


def test_decompose_three_sphere(double):
    report = decompose(double)
    assert len(report.steps) == 1
    assert report.leaves == ()
    assert report.dropped_trivial == 2
    assert report.s2xs1_factors == 0
    assert report.homology_balanced()


def test_decompose_s2xs1(s2xs1):
    report = decompose(s2xs1)
    assert report.s2xs1_factors == 1
    assert report.homology_balanced()
    assert h1(s2xs1) == HomologyGroup(1, ())
    # the remaining piece decomposed to trivial or a sphere-free leaf
    for leaf in report.leaves:
        assert leaf.homology == HomologyGroup(0, ())


def test_decompose_empty():
    report = decompose(sphere_s3())
    assert report.dropped_trivial == 1
    assert report.leaves == () and report.steps == ()
    assert report.homology_balanced()


def test_decompose_requires_closed(single_tet):
    with pytest.raises(InvalidTriangulationError):
        decompose(single_tet)


def test_decompose_sum_torsion_ledger():
    # Z/4 + Z/4 sum: the leaves' torsion multiset must come back
    tri = connected_sum(closed_fixture(5), closed_fixture(5))
    report = decompose(tri)
    assert report.homology_balanced()
    torsion = sorted(
        d for leaf in report.leaves for d in leaf.homology.torsion)
    assert torsion == [5, 5]


def test_decompose_termination_counter():
    tri = connected_sum(doubled_tet(), closed_fixture(4))
    report = decompose(tri)
    for step in report.steps:
        assert sum(o.n for o in step.report.outputs) < step.tets


def test_leaves_are_sphere_free():
    tri = connected_sum(doubled_tet(), closed_fixture(4))
    report = decompose(tri)
    for leaf in report.leaves:
        assert not full_sphere_search(leaf.triangulation).found


def test_exhaustion_is_loud():
    # A sum containing an L(3,1) summand: its only normal spheres are
    # the destructive kind whose collapse swallows the lens piece, so
    # the retry pool runs dry and the driver must raise, not lie.
    tri = connected_sum(closed_fixture(4), closed_fixture(3))
    with pytest.raises(DecompositionError):
        decompose(tri)


def test_check_reducible_small_is_not_applicable(double):
    verdict = check_reducible_minimal(double)
    assert verdict.verdict == "not-applicable"
    assert verdict.enumerations == 0
    assert not verdict.applicable


def test_check_reducible_finds_certificate():
    tri = connected_sum(doubled_tet(), closed_fixture(4))
    assert tri.n > 4
    verdict = check_reducible_minimal(tri, assume_minimal=True)
    assert verdict.verdict == "reducible"
    assert verdict.enumerations == pattern_count(tri.n, 2)
    cls = classify(tri, verdict.certificate)
    assert is_nontrivial_sphere(cls)
    assert len(quad_support(verdict.certificate, tri.n)) <= 2


def test_check_reducible_negative(zero_efficient_5):
    verdict = check_reducible_minimal(zero_efficient_5)
    assert verdict.verdict == "no-restricted-sphere"
    assert verdict.enumerations == pattern_count(5, 2)
    assert "assum" in verdict.assumption
    assert not full_sphere_search(zero_efficient_5).found


def test_decompose_deterministic(double):
    a = decompose(double)
    b = decompose(double)
    assert [s.sphere for s in a.steps] == [s.sphere for s in b.steps]
    assert [l.triangulation for l in a.leaves] == \
        [l.triangulation for l in b.leaves]
