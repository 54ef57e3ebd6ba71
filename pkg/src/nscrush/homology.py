"""Integer first homology via Smith normal form.

All arithmetic is over Python integers, so there is no overflow to
worry about.  H1 serves as the independent correctness oracle for the
decomposition pipeline: first homology is additive under connected sum,
so the ledger H1(input) = H1(summand_1) + H1(summand_2) + ... must
balance across every collapse.
"""

from dataclasses import dataclass

from .errors import InvalidTriangulationError
from .skeleton import EDGES, EDGE_INDEX, compute_skeleton, validate


@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated abelian group in canonical form.

    `betti` is the free rank; `torsion` is the ascending chain of
    invariant factors d1 | d2 | ..., each >= 2.  Equality of canonical
    forms is group isomorphism.
    """
    betti: int
    torsion: tuple

    def __post_init__(self):
        assert self.betti >= 0
        for a, b in zip(self.torsion, self.torsion[1:]):
            assert b % a == 0
        assert all(d >= 2 for d in self.torsion)

    def __str__(self):
        parts = ["Z^{}".format(self.betti)]
        parts += ["Z/{}".format(d) for d in self.torsion]
        return " + ".join(parts)

    @property
    def trivial(self):
        return self.betti == 0 and not self.torsion


def _factorize(m):
    out = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def direct_sum(*groups):
    """Direct sum, re-canonicalized into a divisibility chain."""
    betti = sum(g.betti for g in groups)
    primary = {}
    for g in groups:
        for d in g.torsion:
            for p, k in _factorize(d).items():
                primary.setdefault(p, []).append(p ** k)
    slots = max((len(v) for v in primary.values()), default=0)
    chain = []
    for j in range(slots):
        factor = 1
        for p, powers in primary.items():
            powers.sort(reverse=True)
            if j < len(powers):
                factor *= powers[j]
        chain.append(factor)
    chain.reverse()
    return HomologyGroup(betti, tuple(chain))


def smith_normal_form(matrix, rows=None, cols=None):
    """Diagonalize an integer matrix by unimodular row/column moves.

    Returns (diagonal, rank): the full min(rows, cols) diagonal in a
    divisibility chain with trailing zeros, and the count of nonzero
    entries.  Pivots are chosen by minimal absolute value and entries
    are kept small with gcd-style reductions.
    """
    diag, rank, _, _ = smith_normal_form_with_transforms(matrix, rows, cols)
    return diag, rank


def smith_normal_form_with_transforms(matrix, rows=None, cols=None):
    """As smith_normal_form, also returning unimodular S (rows x rows)
    and T (cols x cols) with S * M * T equal to the diagonal matrix."""
    a = [list(row) for row in matrix]
    r = len(a) if rows is None else rows
    c = (len(a[0]) if a else 0) if cols is None else cols
    assert len(a) == r and all(len(row) == c for row in a)
    s = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    t = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        s[i], s[j] = s[j], s[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in t:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, mult):
        a[dst] = [x + mult * y for x, y in zip(a[dst], a[src])]
        s[dst] = [x + mult * y for x, y in zip(s[dst], s[src])]

    def add_col(dst, src, mult):
        for row in a:
            row[dst] += mult * row[src]
        for row in t:
            row[dst] += mult * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        s[i] = [-x for x in s[i]]

    k = 0
    size = min(r, c)
    while k < size:
        pivot = None
        for i in range(k, r):
            for j in range(k, c):
                if a[i][j] != 0 and (pivot is None
                                     or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        swap_cols(k, pivot[1])
        while True:
            # Euclid on the pivot column, then the pivot row.
            dirty = False
            for i in range(k + 1, r):
                if a[i][k] == 0:
                    continue
                q = a[i][k] // a[k][k]
                add_row(i, k, -q)
                if a[i][k] != 0:
                    swap_rows(i, k)
                    dirty = True
            for j in range(k + 1, c):
                if a[k][j] == 0:
                    continue
                q = a[k][j] // a[k][k]
                add_col(j, k, -q)
                if a[k][j] != 0:
                    swap_cols(j, k)
                    dirty = True
            if dirty:
                continue
            # Pivot must divide everything that remains, or the chain
            # breaks later; fold an offending row in and keep reducing.
            offender = None
            for i in range(k + 1, r):
                for j in range(k + 1, c):
                    if a[i][j] % a[k][k] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(k, offender, 1)
        if a[k][k] < 0:
            negate_row(k)
        k += 1

    diag = [a[i][i] for i in range(size)]
    rank = sum(1 for d in diag if d != 0)
    return diag, rank, s, t


def integer_det(matrix):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def boundary_matrices(tri):
    """(d2, d1): boundary maps of the cellular chain complex of the
    skeleton, over class orientations fixed by each class's
    lexicographically least representative.

    d1 is (#vertex classes) x (#edge classes); d2 is (#edge classes) x
    (#face classes); d1 * d2 = 0.
    """
    report = validate(tri)
    if not (report.is_manifold and report.orientable):
        raise InvalidTriangulationError(
            "homology requires a valid orientable complex: "
            + "; ".join(report.failures))
    sk = compute_skeleton(tri)
    corner_class = {}
    for k, cls in enumerate(sk.vertex_classes):
        for corner in cls:
            corner_class[corner] = k
    edge_class = {}
    for k, cls in enumerate(sk.edge_classes):
        for (i, e, sgn) in cls:
            edge_class[(i, e)] = (k, sgn)

    nv, ne, nf = len(sk.vertex_classes), len(sk.edge_classes), len(sk.face_classes)
    d1 = [[0] * ne for _ in range(nv)]
    for k, cls in enumerate(sk.edge_classes):
        i, e, _ = cls[0]
        u, v = EDGES[e]
        d1[corner_class[(i, v)]][k] += 1
        d1[corner_class[(i, u)]][k] -= 1

    d2 = [[0] * nf for _ in range(ne)]
    for k, cls in enumerate(sk.face_classes):
        i, f = cls[0]
        a, b, c = [v for v in range(4) if v != f]
        for (x, y), simplicial_sign in (((b, c), 1), ((a, c), -1), ((a, b), 1)):
            ek, sgn = edge_class[(i, EDGE_INDEX[(x, y)])]
            d2[ek][k] += simplicial_sign * sgn
    return d2, d1


def h1(tri):
    """First integer homology, in canonical form."""
    d2, d1 = boundary_matrices(tri)
    ne = len(d2)
    _, rank_d1 = smith_normal_form(d1, rows=len(d1), cols=ne)
    diag2, rank_d2 = smith_normal_form(d2, rows=ne, cols=len(d2[0]) if d2 else 0)
    betti = (ne - rank_d1) - rank_d2
    torsion = tuple(d for d in diag2 if d >= 2)
    return HomologyGroup(betti, torsion)
