"""Skeleton (vertex/edge/face classes), validation and Euler characteristic.

The skeleton is the orbit structure of the gluing maps: vertex classes
partition the 4n tetrahedron corners, edge classes partition the 6n
tetrahedron edges (with a relative sign per incidence, so reversed
identifications are detectable), face classes are glued pairs or
boundary singletons.
"""

from dataclasses import dataclass

from . import perms
from .errors import InvalidTriangulationError

# Edge slots of one tetrahedron, as vertex pairs u < v.
EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {uv: k for k, uv in enumerate(EDGES)}
for _k, (_u, _v) in enumerate(EDGES):
    EDGE_INDEX[(_v, _u)] = _k


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, a):
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self):
        groups = {}
        for a in range(len(self.parent)):
            groups.setdefault(self.find(a), []).append(a)
        return [groups[r] for r in sorted(groups)]


class _SignedUnionFind:
    """Union-find tracking a relative sign to each element's root."""

    def __init__(self, size):
        self.parent = list(range(size))
        self.sign = [1] * size
        self.conflicts = set()

    def find(self, a):
        if self.parent[a] == a:
            return a, 1
        root, s = self.find(self.parent[a])
        self.parent[a] = root
        self.sign[a] *= s
        return root, self.sign[a]

    def union(self, a, b, rel):
        """Assert sign(a) = rel * sign(b); record a conflict if violated."""
        ra, sa = self.find(a)
        rb, sb = self.find(b)
        if ra == rb:
            if sa != rel * sb:
                self.conflicts.add(ra)
            return
        if ra < rb:
            self.parent[rb] = ra
            self.sign[rb] = sa * rel * sb
        else:
            self.parent[ra] = rb
            self.sign[ra] = sb * rel * sa

    def classes(self):
        groups = {}
        for a in range(len(self.parent)):
            root, s = self.find(a)
            groups.setdefault(root, []).append((a, s))
        return [groups[r] for r in sorted(groups)]


@dataclass(frozen=True)
class Skeleton:
    vertex_classes: tuple   # tuple of tuples of (tet, vertex)
    edge_classes: tuple     # tuple of tuples of (tet, edge_index, sign)
    face_classes: tuple     # tuple of 2-tuples or 1-tuples of (tet, face)
    boundary_faces: tuple   # tuple of (tet, face)
    edge_reversed: tuple    # edge class indices glued to themselves reversed

    @property
    def closed(self):
        return not self.boundary_faces

    def edge_degree(self, k):
        return len(self.edge_classes[k])

    def counts(self):
        """(V, E, F, T-free) class counts; T comes from the triangulation."""
        return (len(self.vertex_classes), len(self.edge_classes),
                len(self.face_classes))


def compute_skeleton(tri):
    """Orbit closure of the gluing maps on corners, edges and faces."""
    n = tri.n
    corner_uf = _UnionFind(4 * n)
    edge_uf = _SignedUnionFind(6 * n)
    face_pairs = []
    boundary = []
    seen = set()
    for i in range(n):
        for f in range(4):
            rec = tri.gluing(i, f)
            if rec is None:
                boundary.append((i, f))
                continue
            j, g, p = rec
            if (i, f) not in seen:
                seen.add((j, g))
                face_pairs.append(((i, f), (j, g)) if (i, f) <= (j, g)
                                  else ((j, g), (i, f)))
            for v in range(4):
                if v == f:
                    continue
                corner_uf.union(4 * i + v, 4 * j + p[v])
            for u, v in EDGES:
                if u == f or v == f:
                    continue
                e = EDGE_INDEX[(u, v)]
                pu, pv = p[u], p[v]
                e2 = EDGE_INDEX[(pu, pv)]
                rel = 1 if pu < pv else -1
                edge_uf.union(6 * i + e, 6 * j + e2, rel)

    vertex_classes = tuple(
        tuple((a // 4, a % 4) for a in cls) for cls in corner_uf.classes())
    edge_classes = tuple(
        tuple((a // 6, a % 6, s) for a, s in cls)
        for cls in edge_uf.classes())
    conflicted_roots = {edge_uf.find(c)[0] for c in edge_uf.conflicts}
    reversed_edges = tuple(
        k for k, cls in enumerate(edge_classes)
        if edge_uf.find(6 * cls[0][0] + cls[0][1])[0] in conflicted_roots)
    face_classes = tuple(sorted(face_pairs) +
                         [((i, f),) for (i, f) in sorted(boundary)])
    return Skeleton(vertex_classes, edge_classes, face_classes,
                    tuple(sorted(boundary)), reversed_edges)


def euler_characteristic(tri):
    """V - E + F - T over skeleton classes; 0 for closed 3-manifolds."""
    sk = compute_skeleton(tri)
    v, e, f = sk.counts()
    return v - e + f - tri.n


def is_connected(tri):
    """Connectivity of the tetrahedron gluing graph (n = 0 counts as
    connected)."""
    if tri.n == 0:
        return True
    seen = {0}
    queue = [0]
    while queue:
        i = queue.pop()
        for f in range(4):
            rec = tri.gluing(i, f)
            if rec is not None and rec[0] not in seen:
                seen.add(rec[0])
                queue.append(rec[0])
    return len(seen) == tri.n


@dataclass(frozen=True)
class ValidationReport:
    orientable: bool
    closed: bool
    vertex_link_types: tuple    # per vertex class: 'sphere'|'disk'|'other'
    edge_valid: bool
    failures: tuple

    @property
    def is_manifold(self):
        return self.edge_valid and all(
            t in ("sphere", "disk") for t in self.vertex_link_types)

    @property
    def ok(self):
        return self.is_manifold and self.orientable


def _link_type(tri, corners):
    """Classify the link surface assembled from the corner triangles of
    one vertex class.

    The link triangle at corner (i, v) has one side in each face f of
    tet i with f != v; gluing face f via p identifies side (i, v, f)
    with side (j, p(v), p(f)).  Its vertices sit on the edges {v, w}
    and are identified accordingly (flags (i, v, w)).
    """
    corner_ids = {c: k for k, c in enumerate(corners)}
    comp = _UnionFind(len(corners))
    flag_uf = _UnionFind(4 * len(corners))

    def flag_id(c, w):
        return 4 * c + w

    sides = 0
    boundary_sides = 0
    for c, (i, v) in enumerate(corners):
        for f in range(4):
            if f == v:
                continue
            sides += 1
            rec = tri.gluing(i, f)
            if rec is None:
                boundary_sides += 1
                continue
            j, g, p = rec
            c2 = corner_ids[(j, p[v])]
            comp.union(c, c2)
            for w in range(4):
                if w == v or w == f:
                    continue
                flag_uf.union(flag_id(c, w), flag_id(c2, p[w]))
    if len({comp.find(c) for c in range(len(corners))}) > 1:
        return "other"
    faces_l = len(corners)
    edges_l = (sides + boundary_sides) // 2
    used = {flag_uf.find(4 * c + w)
            for c, (i, v) in enumerate(corners) for w in range(4) if w != v}
    chi = len(used) - edges_l + faces_l
    if boundary_sides == 0 and chi == 2:
        return "sphere"
    if boundary_sides > 0 and chi == 1:
        return "disk"
    return "other"


def validate(tri):
    """Check the complex is an orientable manifold triangulation.

    Defects are reported, never raised.  Orientability uses a +-1
    labelling of tetrahedra: a gluing with an odd permutation joins
    tetrahedra of equal label, an even permutation joins opposite
    labels; the complex is orientable iff a consistent labelling
    exists.
    """
    n = tri.n
    failures = []
    sk = compute_skeleton(tri)

    orientable = True
    label = [0] * n
    for start in range(n):
        if label[start] != 0:
            continue
        label[start] = 1
        queue = [start]
        while queue:
            i = queue.pop()
            for f in range(4):
                rec = tri.gluing(i, f)
                if rec is None:
                    continue
                j, _, p = rec
                want = label[i] * (1 if perms.sign(p) < 0 else -1)
                if label[j] == 0:
                    label[j] = want
                    queue.append(j)
                elif label[j] != want:
                    orientable = False
    if not orientable:
        failures.append("not orientable: no consistent tetrahedron labelling")

    edge_valid = not sk.edge_reversed
    for k in sk.edge_reversed:
        failures.append(
            "edge class {} is identified to itself in reverse".format(k))

    link_types = []
    for k, corners in enumerate(sk.vertex_classes):
        t = _link_type(tri, corners)
        link_types.append(t)
        if t == "other":
            failures.append("vertex class {}: link is not a sphere or disk"
                            .format(k))

    return ValidationReport(
        orientable=orientable,
        closed=sk.closed,
        vertex_link_types=tuple(link_types),
        edge_valid=edge_valid,
        failures=tuple(failures))


def require_closed_orientable(tri, *, allow_boundary=False):
    """Gate used by sphere/crush/decomposition operations."""
    report = validate(tri)
    if not report.is_manifold:
        raise InvalidTriangulationError(
            "not a manifold triangulation: " + "; ".join(report.failures))
    if not report.orientable:
        raise InvalidTriangulationError("not orientable")
    if not allow_boundary and not report.closed:
        raise InvalidTriangulationError("triangulation has boundary")
    return report
