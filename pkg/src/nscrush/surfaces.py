"""Normal surface coordinates, matching equations and the piece complex.

Coordinate layout, frozen across every module and file format: each
tetrahedron i contributes 7 consecutive coordinates,

    t(i,0) t(i,1) t(i,2) t(i,3) q(i,01|23) q(i,02|13) q(i,03|12)

at columns 7i .. 7i+6, tetrahedra ascending.  t(i,v) counts triangles
cutting off vertex v; q(i,s) counts quadrilaterals of separation s.
A vector is admissible when it is non-negative, satisfies every
matching equation, and has at most one nonzero quad type per
tetrahedron.

Normal isotopy ordering inside a tetrahedron: triangle copy 0 is the
one closest to its vertex; the quadrilateral stack sits between the
four triangle families, with quad copy 0 closest to the separation
side that contains vertex 0.  This ordering is what makes arc pairing
across faces deterministic.
"""

from dataclasses import dataclass

from .errors import AdmissibilityError, InvalidTriangulationError
from .skeleton import EDGES, compute_skeleton, validate

# The three quad separations, index order frozen.
SEPS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))

_PAIR_SEP = {}
for _s, (_p0, _p1) in enumerate(SEPS):
    for (_a, _b) in (_p0, _p1):
        _PAIR_SEP[(_a, _b)] = _s
        _PAIR_SEP[(_b, _a)] = _s


def sep_of_pair(a, b):
    """The separation putting a and b on the same side."""
    return _PAIR_SEP[(a, b)]


def sep_partner(s, v):
    """The vertex sharing v's side of separation s."""
    for side in SEPS[s]:
        if v in side:
            return side[0] if side[1] == v else side[1]
    raise ValueError(v)


def sep_side(s, v):
    """0 if v lies on the side of s containing vertex 0, else 1."""
    return 0 if v in SEPS[s][0] else 1


def quad_splits_edge(s, u, v):
    """True if a quad of separation s crosses edge {u, v}."""
    return sep_side(s, u) != sep_side(s, v)


def tri_col(i, v):
    return 7 * i + v


def quad_col(i, s):
    return 7 * i + 4 + s


def zero_vector(tri):
    return (0,) * (7 * tri.n)


def tri_coord(x, i, v):
    return x[7 * i + v]


def quad_coord(x, i, s):
    return x[7 * i + 4 + s]


def quad_type(x, i):
    """The separation with nonzero quad coordinate in tet i, or None."""
    found = None
    for s in range(3):
        if x[quad_col(i, s)] != 0:
            if found is not None:
                raise AdmissibilityError(
                    "two quad types in tetrahedron {}".format(i))
            found = s
    return found


def quad_support(x, n):
    """Tetrahedra carrying at least one quadrilateral."""
    return tuple(i for i in range(n)
                 if any(x[quad_col(i, s)] for s in range(3)))


def format_vector(x):
    return " ".join(str(c) for c in x)


def parse_vector(line, n):
    parts = line.split()
    if len(parts) != 7 * n:
        raise ValueError(
            "expected {} coordinates, got {}".format(7 * n, len(parts)))
    return tuple(int(w) for w in parts)


def arc_count(x, i, f, v):
    """Arcs cutting off corner v inside face f of tet i."""
    return x[tri_col(i, v)] + x[quad_col(i, sep_of_pair(v, f))]


@dataclass(frozen=True)
class MatchingSystem:
    """One row per (interior face class, arc type): the arc counts on
    the two sides of the face agree.  Entries lie in {-1, 0, +1}; a row
    is stored sparsely as ((column, coefficient), ...)."""
    ncols: int
    rows: tuple            # sparse rows
    row_labels: tuple      # ((i, f), (j, g), arc corner v) per row

    def dense(self):
        out = []
        for row in self.rows:
            dense = [0] * self.ncols
            for col, coeff in row:
                dense[col] = coeff
            out.append(dense)
        return out

    def satisfied_by(self, x):
        return all(sum(coeff * x[col] for col, coeff in row) == 0
                   for row in self.rows)


def matching_system(tri):
    """Matching equations of the triangulation, rows ordered by
    (face class, arc corner)."""
    report = validate(tri)
    if not (report.is_manifold and report.orientable):
        raise InvalidTriangulationError(
            "matching equations need a valid complex: "
            + "; ".join(report.failures))
    sk = compute_skeleton(tri)
    rows = []
    labels = []
    for cls in sk.face_classes:
        if len(cls) != 2:
            continue
        (i, f), (j, g) = cls
        p = tri.gluing(i, f)[2]
        for v in range(4):
            if v == f:
                continue
            raw = [(tri_col(i, v), 1),
                   (quad_col(i, sep_of_pair(v, f)), 1),
                   (tri_col(j, p[v]), -1),
                   (quad_col(j, sep_of_pair(p[v], g)), -1)]
            combined = {}
            for col, coeff in raw:
                combined[col] = combined.get(col, 0) + coeff
            row = tuple(sorted((c, k) for c, k in combined.items() if k))
            rows.append(row)
            labels.append(((i, f), (j, g), v))
    return MatchingSystem(7 * tri.n, tuple(rows), tuple(labels))


def is_admissible(tri, x):
    """Non-negative, matching equations, at most one quad type per tet."""
    if len(x) != 7 * tri.n:
        raise ValueError(
            "expected {} coordinates, got {}".format(7 * tri.n, len(x)))
    if any(c < 0 for c in x):
        return False
    for i in range(tri.n):
        if sum(1 for s in range(3) if x[quad_col(i, s)]) > 1:
            return False
    return matching_system(tri).satisfied_by(x)


def vertex_link_vector(tri, vclass):
    """Canonical link vector of one vertex class: t = 1 on each corner
    in the class, everything else zero."""
    x = [0] * (7 * tri.n)
    for (i, v) in vclass:
        x[tri_col(i, v)] = 1
    return tuple(x)


def all_links_vector(tri):
    """Every triangle coordinate 1, every quad 0; always admissible."""
    x = [0] * (7 * tri.n)
    for i in range(tri.n):
        for v in range(4):
            x[tri_col(i, v)] = 1
    return tuple(x)


def edge_weight(tri, x, edge_cls):
    """Intersection count of the surface with one edge class, computed
    from every incidence; matching forces agreement, so disagreement is
    an internal error."""
    weights = set()
    for (i, e, _sign) in edge_cls:
        u, v = EDGES[e]
        w = x[tri_col(i, u)] + x[tri_col(i, v)]
        for s in range(3):
            if quad_splits_edge(s, u, v):
                w += x[quad_col(i, s)]
        weights.add(w)
    if len(weights) != 1:
        raise AssertionError(
            "edge weight disagrees across incidences: {}".format(weights))
    return weights.pop()


class PieceComplex:
    """The explicit cell structure of a normal surface.

    pieces: tuples (tet, kind, arg, copy) with kind 'tri' (arg = vertex)
    or 'quad' (arg = separation).  arcs: ((piece_a, piece_b), interior)
    with piece_b None on boundary faces.  points: (edge_class_index, k)
    with k below the edge weight.
    """

    def __init__(self, tri, x):
        if not is_admissible(tri, x):
            raise AdmissibilityError("vector is not admissible")
        self.triangulation = tri
        self.coords = tuple(x)
        sk = compute_skeleton(tri)
        self.pieces = []
        index = {}
        for i in range(tri.n):
            for v in range(4):
                for copy in range(x[tri_col(i, v)]):
                    index[(i, "tri", v, copy)] = len(self.pieces)
                    self.pieces.append((i, "tri", v, copy))
            for s in range(3):
                for copy in range(x[quad_col(i, s)]):
                    index[(i, "quad", s, copy)] = len(self.pieces)
                    self.pieces.append((i, "quad", s, copy))
        assert len(self.pieces) == sum(x)

        def piece_on(i, f, v, depth):
            """Piece owning the depth-th arc at corner v of face f."""
            t = x[tri_col(i, v)]
            if depth < t:
                return index[(i, "tri", v, depth)]
            s = sep_of_pair(v, f)
            from_v = depth - t
            copies = x[quad_col(i, s)]
            copy = from_v if sep_side(s, v) == 0 else copies - 1 - from_v
            return index[(i, "quad", s, copy)]

        self._index = index
        self.arcs = []
        self._arc_corners = []   # (corner label at each end) per arc
        self.boundary_arc_count = 0
        for cls in sk.face_classes:
            if len(cls) == 2:
                (i, f), (j, g) = cls
                p = tri.gluing(i, f)[2]
                for v in range(4):
                    if v == f:
                        continue
                    count = arc_count(x, i, f, v)
                    assert count == arc_count(x, j, g, p[v])
                    for depth in range(count):
                        self.arcs.append(
                            ((piece_on(i, f, v, depth),
                              piece_on(j, g, p[v], depth)), True))
                        self._arc_corners.append((v, p[v]))
            else:
                (i, f), = cls
                for v in range(4):
                    if v == f:
                        continue
                    for depth in range(arc_count(x, i, f, v)):
                        self.arcs.append(
                            ((piece_on(i, f, v, depth), None), False))
                        self._arc_corners.append((v, None))
                        self.boundary_arc_count += 1

        self.points = []
        for k, cls in enumerate(sk.edge_classes):
            for m in range(edge_weight(tri, x, cls)):
                self.points.append((k, m))

        self._component_ids = self._split_components()

    def _split_components(self):
        parent = list(range(len(self.pieces)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (ends, interior) in self.arcs:
            if interior:
                a, b = find(ends[0]), find(ends[1])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(a) for a in range(len(self.pieces))]

    @property
    def closed(self):
        return self.boundary_arc_count == 0

    def euler(self):
        return len(self.points) - len(self.arcs) + len(self.pieces)

    def component_count(self):
        return len(set(self._component_ids))

    def component_vectors(self):
        """Coordinate vector of each connected component, in canonical
        (lexicographic) order; they sum to the original vector."""
        n = self.triangulation.n
        out = {}
        for pid, (i, kind, arg, _copy) in zip(self._component_ids, self.pieces):
            vec = out.setdefault(pid, [0] * (7 * n))
            col = tri_col(i, arg) if kind == "tri" else quad_col(i, arg)
            vec[col] += 1
        return sorted(tuple(v) for v in out.values())

    def transverse_orientable(self):
        """Propagate a transverse orientation over the piece adjacency
        graph; returns False on contradiction (a one-sided surface).

        The positive side of a triangle faces its vertex; the positive
        side of a quad faces the separation side containing vertex 0.
        Across an arc, the two pieces' sides facing the arc's face
        corner are the same side of the surface.
        """
        orient = [0] * len(self.pieces)

        def toward_corner(piece, v):
            _i, kind, arg, _copy = self.pieces[piece]
            if kind == "tri":
                return 1
            return 1 if sep_side(arg, v) == 0 else -1

        adj = {}
        for (ends, interior), (va, vb) in zip(self.arcs, self._arc_corners):
            if not interior:
                continue
            a, b = ends
            rel = toward_corner(a, va) * toward_corner(b, vb)
            adj.setdefault(a, []).append((b, rel))
            adj.setdefault(b, []).append((a, rel))
        for start in range(len(self.pieces)):
            if orient[start] != 0:
                continue
            orient[start] = 1
            queue = [start]
            while queue:
                a = queue.pop()
                for b, rel in adj.get(a, ()):
                    want = orient[a] * rel
                    if orient[b] == 0:
                        orient[b] = want
                        queue.append(b)
                    elif orient[b] != want:
                        return False
        return True


def build_piece_complex(tri, x):
    return PieceComplex(tri, x)


def euler_weighted(tri, x):
    """Euler characteristic straight from the coordinates, as the
    linear functional points - arcs + pieces over class sums.  Cross
    check for PieceComplex.euler()."""
    sk = compute_skeleton(tri)
    pieces = sum(x)
    arcs = 0
    for cls in sk.face_classes:
        (i, f) = cls[0]
        arcs += sum(arc_count(x, i, f, v) for v in range(4) if v != f)
    points = sum(edge_weight(tri, x, cls) for cls in sk.edge_classes)
    return points - arcs + pieces


@dataclass(frozen=True)
class SurfaceClass:
    kind: str            # sphere | disk | other-closed | other-with-boundary
    connected: bool
    orientable: bool
    vertex_linking: bool
    euler: int


def classify(tri, x):
    """Classify the normal surface carried by x.

    kind follows the usual table: connected + closed + euler 2 is a
    sphere, connected + boundary + euler 1 is a disk, anything else is
    'other'.  vertex_linking is the quad-free test; for connected
    surfaces that is exactly the vertex links.
    """
    complex_ = PieceComplex(tri, x)
    chi = complex_.euler()
    assert chi == euler_weighted(tri, x)
    connected = complex_.component_count() == 1
    closed = complex_.closed
    orientable = complex_.transverse_orientable()
    linking = all(x[quad_col(i, s)] == 0
                  for i in range(tri.n) for s in range(3))
    if connected and closed and chi == 2:
        kind = "sphere"
        if not orientable:
            raise RuntimeError(
                "orientation propagation contradicted itself on a sphere")
    elif connected and not closed and chi == 1:
        kind = "disk"
    elif closed:
        kind = "other-closed"
    else:
        kind = "other-with-boundary"
    return SurfaceClass(kind=kind, connected=connected, orientable=orientable,
                        vertex_linking=linking, euler=chi)


def components(tri, x):
    """Split x into the coordinate vectors of its connected components."""
    return PieceComplex(tri, x).component_vectors()


def is_nontrivial_sphere(surface_class):
    """The triviality cut: a connected normal 2-sphere that is not a
    vertex link (equivalently, it carries at least one quadrilateral).
    Kept in one place in case a stricter notion is ever needed."""
    return (surface_class.kind == "sphere" and surface_class.connected
            and not surface_class.vertex_linking)
