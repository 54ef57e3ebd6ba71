"""Enumeration of admissible vertex normal surfaces.

The quadrilateral condition is non-convex, so the admissible region is
a union of convex sub-cones, one per choice of allowed quad type (or
no quad) in each tetrahedron.  `vertex_solutions` walks that choice
tree depth-first, sharing double-description work along common
prefixes and abandoning branches whose chosen quad columns can no
longer appear in any ray.  Results are deduplicated across branches
and returned scaled (gcd 1) and lexicographically sorted.

`brute_force_solutions` is the testing oracle: an exhaustive scan of
all admissible vectors with bounded coordinates.  It prunes only by
sound constraint filtering, so it visits exactly the admissible set.
"""

import itertools
from fractions import Fraction

from .dd import ConeState
from .errors import BudgetExceededError, InvalidTriangulationError
from .skeleton import validate
from .surfaces import matching_system, quad_col, tri_col

#: An admissibility scan whose estimated cost 7n * (bound+1)^(7n)
#: exceeds this is refused.  The default admits n <= 3 with bound 2.
DEFAULT_SCAN_BUDGET = 10 ** 12


def _require_valid(tri):
    report = validate(tri)
    if not (report.is_manifold and report.orientable):
        raise InvalidTriangulationError(
            "enumeration needs a valid orientable complex: "
            + "; ".join(report.failures))
    return report


def _rows_by_depth(tri, ms):
    """Assign each matching row to the larger tetrahedron it touches;
    the DFS can apply a row once both endpoints are in scope."""
    by_depth = [[] for _ in range(tri.n)]
    for row, ((i, _f), (j, _g), _v) in zip(ms.rows, ms.row_labels):
        by_depth[max(i, j)].append(row)
    return by_depth


def vertex_solutions(tri):
    """All admissible extreme rays (vertex normal surfaces), scaled to
    smallest integer lattice points and sorted lexicographically.

    Per branch of the quad-type choice tree the cone is convex and the
    double description method applies directly; a branch dies as soon
    as one of its chosen quad columns has empty support across the
    surviving rays, since every surface it could still produce also
    lives in the sibling branch without that quad.
    """
    _require_valid(tri)
    n = tri.n
    if n == 0:
        return ()
    ms = matching_system(tri)
    rows_by_depth = _rows_by_depth(tri, ms)
    found = set()

    def descend(depth, state, chosen_quads):
        for choice in (None, 0, 1, 2):
            st = state.copy()
            cols = [tri_col(depth, v) for v in range(4)]
            quads = list(chosen_quads)
            if choice is not None:
                cols.append(quad_col(depth, choice))
                quads.append(quad_col(depth, choice))
            st.add_columns(cols)
            for row in rows_by_depth[depth]:
                st.add_constraint(row)
            if quads:
                alive = st.support_union()
                if any(not (alive >> st.pos_of[q]) & 1 for q in quads):
                    continue
            if depth == n - 1:
                for vec in st.vectors(7 * n):
                    found.add(vec)
            else:
                descend(depth + 1, st, quads)

    descend(0, ConeState(), [])
    found.discard((0,) * (7 * n))
    return tuple(sorted(found))


def _per_tet_options(bound):
    """All 7-coordinate blocks for one tetrahedron with coordinates at
    most `bound` and at most one nonzero quad type."""
    out = []
    for tris in itertools.product(range(bound + 1), repeat=4):
        out.append(tris + (0, 0, 0))
        for s in range(3):
            for val in range(1, bound + 1):
                quads = [0, 0, 0]
                quads[s] = val
                out.append(tris + tuple(quads))
    return out


def _scan_order(tri):
    """Tetrahedra in a breadth-first order over the gluing graph, so
    each new tetrahedron is constrained against already-assigned ones
    as early as possible."""
    n = tri.n
    order = []
    seen = set()
    for start in range(n):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            i = queue.pop(0)
            order.append(i)
            for f in range(4):
                rec = tri.gluing(i, f)
                if rec is not None and rec[0] not in seen:
                    seen.add(rec[0])
                    queue.append(rec[0])
    return order


def brute_force_solutions(tri, bound, budget=DEFAULT_SCAN_BUDGET):
    """Every admissible vector with all coordinates <= bound, by
    exhaustive scan, sorted lexicographically.  Includes the zero
    vector.  Intended for small complexes; refuses estimated work
    beyond `budget`."""
    _require_valid(tri)
    n = tri.n
    if bound < 0:
        raise ValueError("negative bound")
    cost = 7 * n * (bound + 1) ** (7 * n)
    if cost > budget:
        raise BudgetExceededError(
            "scan cost estimate {} exceeds budget {}".format(cost, budget))
    if n == 0:
        return ((),)
    ms = matching_system(tri)
    order = _scan_order(tri)
    position = {tet: d for d, tet in enumerate(order)}
    options = _per_tet_options(bound)

    # Rows grouped by the depth at which all their columns are known.
    rows_at = [[] for _ in range(n)]
    for row in ms.rows:
        depth = max(position[c // 7] for c, _k in row)
        rows_at[depth].append(row)

    # For depth d, split each row into the part over earlier tets and
    # the part over the new tet; bucket the new tet's options by the
    # values of the new parts so partial assignments extend by lookup.
    def split(row, d):
        tet = order[d]
        old = tuple((c, k) for c, k in row if c // 7 != tet)
        new = tuple((c % 7, k) for c, k in row if c // 7 == tet)
        return old, new

    buckets = []
    old_parts = []
    for d in range(n):
        splits = [split(row, d) for row in rows_at[d]]
        old_parts.append([s[0] for s in splits])
        table = {}
        for opt in options:
            key = tuple(sum(k * opt[c] for c, k in new)
                        for _old, new in splits)
            table.setdefault(key, []).append(opt)
        buckets.append(table)

    results = []
    assignment = {}

    def extend(d):
        if d == n:
            vec = [0] * (7 * n)
            for tet, block in assignment.items():
                vec[7 * tet:7 * tet + 7] = block
            results.append(tuple(vec))
            return
        key = tuple(-sum(k * assignment[c // 7][c % 7] for c, k in old)
                    for old in old_parts[d])
        for opt in buckets[d].get(key, ()):
            assignment[order[d]] = opt
            extend(d + 1)
        assignment.pop(order[d], None)

    extend(0)
    return tuple(sorted(results))


def is_vertex_ray(tri, x):
    """Rank test for extremeness within the vector's own support
    pattern: the matching rows restricted to the support columns must
    have nullity exactly one."""
    support = [c for c, val in enumerate(x) if val != 0]
    if not support:
        return False
    colpos = {c: k for k, c in enumerate(support)}
    ms = matching_system(tri)
    rows = []
    for row in ms.rows:
        r = [Fraction(0)] * len(support)
        for c, k in row:
            if c in colpos:
                r[colpos[c]] = Fraction(k)
        rows.append(r)
    rank = 0
    ncols = len(support)
    pivot_col = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col] / lead
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return (len(support) - rank) == 1
