import itertools
import random
from math import gcd

import pytest

from nscrush.homology import (HomologyGroup, boundary_matrices, direct_sum,
                              h1, integer_det, smith_normal_form,
                              smith_normal_form_with_transforms)
from nscrush.triangulation import Triangulation


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def test_boundary_matrix_shapes(double, single_tet):
    d2, d1 = boundary_matrices(double)
    assert (len(d1), len(d1[0])) == (4, 6)
    assert (len(d2), len(d2[0])) == (6, 4)
    d2s, d1s = boundary_matrices(single_tet)
    assert (len(d1s), len(d1s[0])) == (4, 6)
    assert (len(d2s), len(d2s[0])) == (6, 4)


def test_boundary_of_boundary_zero(double, single_tet, s2xs1, three_tet):
    for tri in (double, single_tet, s2xs1, three_tet):
        d2, d1 = boundary_matrices(tri)
        prod = matmul(d1, d2)
        assert all(v == 0 for row in prod for v in row)


def test_empty_complex_matrices():
    d2, d1 = boundary_matrices(Triangulation(0, {}))
    assert d2 == [] and d1 == []
    assert h1(Triangulation(0, {})) == HomologyGroup(0, ())


def test_snf_classic_2x3():
    # gcd(2,3) = 1 and the determinant is +-6, so the form is (1, 6)
    diag, rank = smith_normal_form([[2, 0], [0, 3]])
    assert diag == [1, 6] and rank == 2


def test_snf_zero_and_identity():
    assert smith_normal_form([[0] * 3 for _ in range(3)]) == ([0, 0, 0], 0)
    eye = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert smith_normal_form(eye) == ([1, 1, 1, 1], 4)


def test_snf_transform_replay():
    m = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    diag, rank, s, t = smith_normal_form_with_transforms(m)
    assert abs(integer_det(s)) == 1
    assert abs(integer_det(t)) == 1
    prod = matmul(matmul(s, m), t)
    for i in range(4):
        for j in range(4):
            assert prod[i][j] == (diag[i] if i == j else 0)
    for a, b in zip(diag, diag[1:]):
        if a != 0:
            assert b % a == 0


def minor_gcd(matrix, k):
    """gcd of all k x k minors; the classic determinantal-divisor
    characterization of the Smith form."""
    rows, cols = len(matrix), len(matrix[0]) if matrix else 0
    g = 0
    for rsel in itertools.combinations(range(rows), k):
        for csel in itertools.combinations(range(cols), k):
            sub = [[matrix[i][j] for j in csel] for i in rsel]
            g = gcd(g, abs(integer_det(sub)))
    return g


@pytest.mark.parametrize("seed", range(8))
def test_snf_matches_minor_gcd_oracle(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 5), rng.randint(1, 5)
    m = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
    diag, rank = smith_normal_form(m)
    prefix = 1
    for k in range(1, min(rows, cols) + 1):
        g = minor_gcd(m, k)
        expected = g // prefix if g else 0
        assert diag[k - 1] == expected
        if g == 0:
            break
        prefix = g


def test_h1_values(double, s2xs1):
    assert h1(double) == HomologyGroup(0, ())
    assert h1(s2xs1) == HomologyGroup(1, ())


def test_h1_relabelling_invariance(s2xs1):
    moved = s2xs1.relabelled({0: 1, 1: 0}, {0: (3, 2, 1, 0), 1: (0, 2, 1, 3)})
    assert h1(moved) == h1(s2xs1)


def test_homology_group_canonical_form():
    with pytest.raises(AssertionError):
        HomologyGroup(0, (3, 2))   # breaks the divisibility chain
    g = HomologyGroup(1, (2, 6))
    assert str(g) == "Z^1 + Z/2 + Z/6"


def test_direct_sum_recanonicalizes():
    a = HomologyGroup(0, (2,))
    b = HomologyGroup(0, (3,))
    assert direct_sum(a, b) == HomologyGroup(0, (6,))
    c = HomologyGroup(0, (3,))
    assert direct_sum(c, c) == HomologyGroup(0, (3, 3))
    assert direct_sum() == HomologyGroup(0, ())
    mixed = direct_sum(HomologyGroup(1, (4,)), HomologyGroup(0, (6,)))
    assert mixed == HomologyGroup(1, (2, 12))
