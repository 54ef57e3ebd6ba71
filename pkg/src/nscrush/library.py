"""Constructions of small triangulations used as fixtures and demos.

Everything here is deterministic: search-based constructions enumerate
candidates in a fixed order and return the first match, so repeated
runs (and repeated test sessions) see identical complexes.
"""

import itertools

from . import perms
from .triangulation import Triangulation
from .skeleton import (EDGE_INDEX, compute_skeleton, euler_characteristic,
                       is_connected, validate)
from .homology import direct_sum, h1, HomologyGroup


def single_tet():
    """One tetrahedron, all four faces boundary (a 3-ball)."""
    return Triangulation(1, {})


def doubled_tet():
    """Two tetrahedra glued along all four faces by the identity.

    The double of a 3-ball: a 2-tetrahedron 3-sphere with 4 vertices.
    """
    return Triangulation(2, {(0, f): (1, perms.IDENTITY) for f in range(4)})


def sphere_s3():
    """The empty triangulation, denoting the standard 3-sphere."""
    return Triangulation(0, {})


def _pairings(slots):
    """All perfect matchings of the face slots, in a fixed order."""
    if not slots:
        yield []
        return
    a = slots[0]
    for k in range(1, len(slots)):
        b = slots[k]
        rest = slots[1:k] + slots[k + 1:]
        for tail in _pairings(rest):
            yield [(a, b)] + tail


def _closed_gluings(n, forced=None):
    """Yield gluing tables of all closed n-tet complexes, in a fixed
    order.

    Every face slot gets glued (never to itself); each face pairing is
    combined with every choice of gluing permutation.  `forced`, if
    given as ((i, f), (j, g), perm), pins that one gluing, which
    callers use to mod out relabelling symmetry.
    """
    slots = [(i, f) for i in range(n) for f in range(4)]
    for matching in _pairings(slots):
        choice_lists = []
        ok = True
        for (i, f), (j, g) in matching:
            if forced is not None and (i, f) == forced[0]:
                if (j, g) != forced[1]:
                    ok = False
                    break
                choice_lists.append([forced[2]])
            else:
                choice_lists.append(
                    [p for p in perms.ALL_PERMS if p[f] == g])
        if not ok:
            continue
        for combo in itertools.product(*choice_lists):
            yield {pair[0]: (pair[1][0], p)
                   for pair, p in zip(matching, combo)}


def search_closed(n, predicate, forced=None):
    """First (in enumeration order) connected closed orientable valid
    complex on n tetrahedra satisfying `predicate`, or None."""
    for gl in _closed_gluings(n, forced):
        try:
            tri = Triangulation(n, gl)
        except Exception:
            continue
        if not is_connected(tri):
            continue
        if euler_characteristic(tri) != 0:
            continue
        report = validate(tri)
        if not (report.ok and report.closed):
            continue
        if predicate(tri):
            return tri
    return None


def s2xs1_two_tet():
    """A 2-tetrahedron closed orientable complex with H1 = Z.

    Found by exhaustive search over 2-tetrahedron gluings; the only
    closed orientable 3-manifold with H1 = Z admitting 2 tetrahedra is
    S^2 x S^1.
    """
    target = HomologyGroup(1, ())
    tri = search_closed(
        2, lambda t: h1(t) == target,
        forced=((0, 0), (1, 0), perms.IDENTITY))
    if tri is None:
        raise RuntimeError("2-tet search found no H1 = Z complex")
    return tri


def small_census_fixture(n, group):
    """First connected closed orientable n-tet complex with the given
    first homology (exhaustive search, relabelling symmetry pinned)."""
    tri = search_closed(n, lambda t: h1(t) == group,
                        forced=((0, 0), (1, 0), perms.IDENTITY))
    if tri is None:
        raise RuntimeError(
            "no {}-tet complex with h1 = {}".format(n, group))
    return tri


def three_tet_fixture():
    """First 3-tet connected closed orientable complex all of whose
    vertex normal solutions have coordinates at most 2, so a bound-2
    exhaustive scan sees every one of them."""
    from .enumeration import vertex_solutions

    def coords_small(t):
        rays = vertex_solutions(t)
        return bool(rays) and max(max(r) for r in rays) <= 2

    tri = search_closed(3, coords_small,
                        forced=((0, 0), (1, 0), perms.IDENTITY))
    if tri is None:
        raise RuntimeError("no 3-tet fixture with small vertex solutions")
    return tri


# ---------------------------------------------------------------------------
# Layered solid tori and lens-space-like closures.

def _boundary_pair(tri):
    sk = compute_skeleton(tri)
    if len(sk.boundary_faces) != 2:
        raise ValueError("need exactly two boundary faces")
    return sk, sk.boundary_faces


def _boundary_edge_sides(tri, sk):
    """For each edge class on the boundary: the list of boundary face
    sides it borders, as (tet, face, (u, v)) with u < v."""
    slot_class = {}
    for k, cls in enumerate(sk.edge_classes):
        for (i, e, _s) in cls:
            slot_class[(i, e)] = k
    sides = {}
    for (i, f) in sk.boundary_faces:
        verts = [v for v in range(4) if v != f]
        for a in range(3):
            for b in range(a + 1, 3):
                u, v = verts[a], verts[b]
                k = slot_class[(i, EDGE_INDEX[(u, v)])]
                sides.setdefault(k, []).append((i, f, (u, v)))
    return sides


def one_tet_solid_torus():
    """A single tetrahedron with two faces identified so the result is
    a solid torus (two boundary faces, Euler characteristic 0)."""
    for p in perms.ALL_PERMS:
        if p[3] != 2:
            continue
        try:
            tri = Triangulation(1, {(0, 3): (0, p)})
        except Exception:
            continue
        report = validate(tri)
        if (report.is_manifold and report.orientable
                and euler_characteristic(tri) == 0
                and len(compute_skeleton(tri).boundary_faces) == 2):
            return tri
    raise RuntimeError("no one-tet solid torus gluing found")


def layer_on_edge(tri, edge_class):
    """Attach a new tetrahedron across a boundary edge.

    The two boundary face sides bordering the chosen edge class are
    glued to faces 3 and 2 of the new tetrahedron, with the new edge
    01 laid along the old boundary edge; faces 0 and 1 of the new
    tetrahedron become the boundary.  Candidate edge directions are
    tried in a fixed order until the result validates.
    """
    sk, _ = _boundary_pair(tri)
    sides = _boundary_edge_sides(tri, sk).get(edge_class, [])
    if len(sides) != 2 or sides[0][:2] == sides[1][:2]:
        raise ValueError("edge class {} is not layerable".format(edge_class))
    (i, f, (u1, v1)), (j, g, (u2, v2)) = sides
    c1 = next(v for v in range(4) if v not in (f, u1, v1))
    c2 = next(v for v in range(4) if v not in (g, u2, v2))
    w = tri.n
    base = {(a, b): rec for (a, b), rec in
            ((key, tri.gluing(key[0], key[1])) for key in
             [(t, fc) for t in range(tri.n) for fc in range(4)])
            if rec is not None}
    for flip1 in (False, True):
        for flip2 in (False, True):
            a1, b1 = (v1, u1) if flip1 else (u1, v1)
            a2, b2 = (v2, u2) if flip2 else (u2, v2)
            pa = [0, 0, 0, 0]
            pa[0], pa[1], pa[2], pa[3] = a1, b1, c1, f
            pb = [0, 0, 0, 0]
            pb[0], pb[1], pb[3], pb[2] = a2, b2, c2, g
            gl = {(a, fc): (rec[0], rec[2]) for (a, fc), rec in base.items()}
            gl[(w, 3)] = (i, tuple(pa))
            gl[(w, 2)] = (j, tuple(pb))
            try:
                out = Triangulation(tri.n + 1, gl)
            except Exception:
                continue
            report = validate(out)
            if (report.is_manifold and report.orientable
                    and euler_characteristic(out) == 0
                    and len(compute_skeleton(out).boundary_faces) == 2):
                return out
    raise ValueError("no valid layering on edge class {}".format(edge_class))


def _layerable_edges(tri):
    sk, _ = _boundary_pair(tri)
    sides = _boundary_edge_sides(tri, sk)
    return sorted(k for k, lst in sides.items()
                  if len(lst) == 2 and lst[0][:2] != lst[1][:2])


def close_boundary(tri, predicate=None):
    """Glue the two remaining boundary faces together; candidate
    permutations are tried in a fixed order and the first closed valid
    orientable result (satisfying `predicate` when given) wins."""
    _, ((i, f), (j, g)) = _boundary_pair(tri)
    base = {}
    for t in range(tri.n):
        for fc in range(4):
            rec = tri.gluing(t, fc)
            if rec is not None:
                base[(t, fc)] = (rec[0], rec[2])
    for p in perms.ALL_PERMS:
        if p[f] != g:
            continue
        gl = dict(base)
        gl[(i, f)] = (j, p)
        try:
            out = Triangulation(tri.n, gl)
        except Exception:
            continue
        report = validate(out)
        if not (report.ok and report.closed and is_connected(out)):
            continue
        if euler_characteristic(out) != 0:
            continue
        if predicate is None or predicate(out):
            return out
    return None


def layered_fixture(layers, predicate=None):
    """Layered solid torus from a choice sequence, closed up.

    `layers` picks, at each step, which layerable boundary edge class
    to use (index into the sorted candidate list, taken modulo its
    length).  Returns the first valid closure, or None.
    """
    tri = one_tet_solid_torus()
    for choice in layers:
        candidates = _layerable_edges(tri)
        if not candidates:
            return None
        tri = layer_on_edge(tri, candidates[choice % len(candidates)])
    return close_boundary(tri, predicate)


def lens_fixture(tets, torsion):
    """First layered closed fixture on `tets` tetrahedra with
    H1 = Z/torsion, searching layer choice sequences in lex order."""
    target = HomologyGroup(0, (torsion,))
    for layers in itertools.product(range(3), repeat=tets - 1):
        out = layered_fixture(layers, lambda t: h1(t) == target)
        if out is not None:
            return out
    raise RuntimeError(
        "no {}-tet layered fixture with torsion {}".format(tets, torsion))


def closed_fixture(tets):
    """First layered closed orientable fixture on `tets` tetrahedra;
    used where only size and validity matter."""
    if tets == 2:
        return doubled_tet()
    for layers in itertools.product(range(3), repeat=tets - 1):
        out = layered_fixture(layers)
        if out is not None:
            return out
    raise RuntimeError("no {}-tet layered fixture".format(tets))


# ---------------------------------------------------------------------------
# Punctures and connected sums.

def _plug_shapes(a, b):
    """Ways to wire two plug tetrahedra a, b into a cut-open face.

    Each shape: (receiver slots for the two cut copies, the two slots
    left as boundary, the two internal gluings).  Slot labels are
    quotiented by tetrahedron relabelling; gluing permutations stay
    free.  The first shape (each side capped by a snapped ball) covers
    most complexes and is cheapest, so it leads.
    """
    shapes = [(((a, 0), (b, 0)), ((a, 1), (b, 1)),
               (((a, 2), (a, 3)), ((b, 2), (b, 3))))]
    for rec2 in ((a, 1), (b, 0)):
        pool = [(a, s) for s in range(1, 4) if (a, s) != rec2]
        pool += [(b, s) for s in range(4) if (b, s) != rec2]
        if rec2 == (a, 1):
            bnds = [((a, 2), (a, 3)), ((a, 2), (b, 0)), ((b, 0), (b, 1))]
        else:
            bnds = [((a, 1), (a, 2)), ((a, 1), (b, 1)), ((b, 1), (b, 2))]
        for bnd in bnds:
            inner = [s for s in pool if s not in bnd]
            first = inner[0]
            for k in (1, 2, 3):
                pair1 = (first, inner[k])
                rest = [s for s in inner[1:] if s != inner[k]]
                shape = (((a, 0), rec2), bnd, (pair1, tuple(rest)))
                if shape != shapes[0]:
                    shapes.append(shape)
    return shapes


def puncture(tri):
    """Dig a ball out of a closed complex: cut one interior face open
    and wire in a two-tetrahedron plug, leaving a two-triangle sphere
    boundary.

    Plug shapes and permutations are searched in a fixed order until
    the result certifies: valid orientable manifold, exactly two
    boundary faces, Euler characteristic 1 (so the boundary is a
    sphere) and unchanged first homology (a ball came out, nothing
    more).  The returned complex leaves its boundary on faces 1 of the
    two plug tetrahedra (indices n and n+1).
    """
    group = h1(tri)
    sk = compute_skeleton(tri)
    cap_a, cap_b = tri.n, tri.n + 1
    interior = [fc for fc in sk.face_classes if len(fc) == 2]
    bases = {}
    for fc in interior:
        base = {}
        for (x, fx, y, fy, p) in tri.gluing_records():
            if (x, fx) == fc[0]:
                continue
            base[(x, fx)] = (y, p)
        bases[fc] = base
    for shape in _plug_shapes(cap_a, cap_b):
        (rec1, rec2), bnd, (pair1, pair2) = shape
        for fc in interior:
            (i, f), (j, g) = fc
            for q1 in [p for p in perms.ALL_PERMS if p[f] == rec1[1]]:
                for q2 in [p for p in perms.ALL_PERMS if p[g] == rec2[1]]:
                    for r1 in [p for p in perms.ALL_PERMS
                               if p[pair1[0][1]] == pair1[1][1]]:
                        for r2 in [p for p in perms.ALL_PERMS
                                   if p[pair2[0][1]] == pair2[1][1]]:
                            gl = dict(bases[fc])
                            gl[(i, f)] = (rec1[0], q1)
                            gl[(j, g)] = (rec2[0], q2)
                            gl[pair1[0]] = (pair1[1][0], r1)
                            gl[pair2[0]] = (pair2[1][0], r2)
                            out = _certify_puncture(
                                tri, gl, bnd, group)
                            if out is not None:
                                return out
    raise RuntimeError("no certifiable puncture found")


def _certify_puncture(tri, gl, bnd, group):
    try:
        out = Triangulation(tri.n + 2, gl)
    except Exception:
        return None
    sk = compute_skeleton(out)
    if sorted(sk.boundary_faces) != sorted(bnd):
        return None
    v, e, f = sk.counts()
    if v - e + f - out.n != 1:
        return None
    report = validate(out)
    if not (report.is_manifold and report.orientable):
        return None
    if not is_connected(out) or h1(out) != group:
        return None
    return out


def connected_sum(t1, t2):
    """Connected sum: puncture both summands and splice the punctured
    boundary spheres together.

    Splice gluings are tried in a fixed order until the result is a
    valid closed orientable connected complex whose first homology is
    the direct sum of the summands' — the certificate that the splice
    really produced the sum.
    """
    return _splice_punctured(
        puncture(t1), puncture(t2), direct_sum(h1(t1), h1(t2)))


def _splice_punctured(p1, p2, expected):
    shift = p1.n
    base = {}
    for (a, fa, b, fb, p) in p1.gluing_records():
        base[(a, fa)] = (b, p)
    for (a, fa, b, fb, p) in p2.gluing_records():
        base[(a + shift, fa)] = (b + shift, p)
    bd1 = list(compute_skeleton(p1).boundary_faces)
    bd2 = [(t + shift, f) for (t, f) in compute_skeleton(p2).boundary_faces]
    for crossed in (False, True):
        targets = bd2 if not crossed else bd2[::-1]
        for qa in [p for p in perms.ALL_PERMS if p[bd1[0][1]] == targets[0][1]]:
            for qb in [p for p in perms.ALL_PERMS if p[bd1[1][1]] == targets[1][1]]:
                gl = dict(base)
                gl[bd1[0]] = (targets[0][0], qa)
                gl[bd1[1]] = (targets[1][0], qb)
                try:
                    out = Triangulation(p1.n + p2.n, gl)
                except Exception:
                    continue
                report = validate(out)
                if not (report.ok and report.closed):
                    continue
                if not is_connected(out):
                    continue
                if euler_characteristic(out) != 0:
                    continue
                if h1(out) != expected:
                    continue
                return out
    raise RuntimeError("no valid splice found for the connected sum")


_POOL_CACHE = {}


def summand_pool():
    """Named certified summand fixtures for building connected sums.

    All torsion summands keep their invariant factors at 4 or above:
    collapsing is known to be able to silently swallow RP^3 and L(3,1)
    pieces (each of their triangulations carries a destructive normal
    sphere), which would dead-end the decomposition driver, so those
    two stay out of the pool.
    """
    if not _POOL_CACHE:
        _POOL_CACHE.update({
            "s3": doubled_tet(),
            "l4": lens_fixture(4, 4),
            "l5": closed_fixture(5),
            "l7": lens_fixture(5, 7),
            "l8": closed_fixture(6),
            "s2xs1": layered_fixture(
                (2, 1, 0, 1),
                lambda t: h1(t) == HomologyGroup(1, ())),
        })
        for name, tri in _POOL_CACHE.items():
            report = validate(tri)
            assert report.ok and report.closed, name
    return dict(_POOL_CACHE)


_PUNCTURE_CACHE = {}


def _cached_puncture(name, tri):
    if name not in _PUNCTURE_CACHE:
        _PUNCTURE_CACHE[name] = puncture(tri)
    return _PUNCTURE_CACHE[name]


def decomposition_corpus():
    """At least 20 connected-sum fixtures: every unordered pair from
    the summand pool, spliced and re-validated.  Returns a list of
    (label, triangulation), deterministically ordered."""
    pool = summand_pool()
    names = sorted(pool)
    corpus = []
    for a in range(len(names)):
        for b in range(a, len(names)):
            na, nb = names[a], names[b]
            tri = _splice_punctured(
                _cached_puncture(na, pool[na]),
                _cached_puncture(nb, pool[nb]),
                direct_sum(h1(pool[na]), h1(pool[nb])))
            corpus.append(("{}#{}".format(na, nb), tri))
    return corpus
