"""Collapsing a connected non-trivial normal 2-sphere.

The sphere's normal disks cut each tetrahedron into blocks:

* corner blocks between parallel triangles (and between the innermost
  triangle and its vertex),
* two truncated prisms flanking the quad stack of a quad-carrying
  tetrahedron, plus quad prisms between parallel quads,
* the central truncated-tetrahedron core of a quad-free tetrahedron.

Collapsing the sphere to a point flattens every block except the
cores; each core re-inflates to a full tetrahedron.  So the surviving
tetrahedra are exactly those with zero quad coordinates, and their new
face gluings are found by walking through the flattened material:
entering a destroyed tetrahedron through face g exits through face g',
the other vertex on g's side of the quad separation, with the vertex
labels swapped by the transposition (g g') — that is the gluing the
collapsed truncated prism induces between the two face centres.

Every output is validated, and the first-homology ledger
h1(input) = h1(outputs) (+ Z for a non-separating sphere) is audited;
any defect raises CrushFailure, which callers treat as "pick another
sphere" rather than a crash.
"""

from dataclasses import dataclass

from . import perms
from .errors import CrushFailure
from .homology import direct_sum, h1, HomologyGroup
from .skeleton import (compute_skeleton, is_connected,
                       require_closed_orientable, validate)
from .surfaces import (arc_count, classify, is_nontrivial_sphere, quad_col,
                       quad_type, sep_of_pair, sep_partner, sep_side, tri_col)
from .triangulation import Triangulation


@dataclass(frozen=True)
class CrushReport:
    input_tets: int
    sphere: tuple
    separating: bool        # the sphere has two complementary sides
    outputs: tuple          # Triangulations, n = 0 meaning a 3-sphere
    destroyed_tets: tuple   # quad-carrying tetrahedra
    validations: tuple      # ValidationReport per output


class _BlockFinder:
    """Blocks of the complement decomposition and the face-region to
    block map used to join them across face gluings."""

    def __init__(self, tri, x):
        self.tri = tri
        self.x = x
        self.quad_sep = [quad_type(x, i) for i in range(tri.n)]
        self.blocks = []
        self.block_id = {}
        for i in range(tri.n):
            for v in range(4):
                for d in range(x[tri_col(i, v)]):
                    self._add(("corner", i, v, d))
            s = self.quad_sep[i]
            if s is None:
                self._add(("core", i))
            else:
                self._add(("tp", i, 0))
                self._add(("tp", i, 1))
                for e in range(1, x[quad_col(i, s)]):
                    self._add(("qprism", i, e))

    def _add(self, block):
        self.block_id[block] = len(self.blocks)
        self.blocks.append(block)

    def corner_region(self, i, f, v, depth):
        """Block behind the face region between arcs depth-1 and depth
        at corner v of face f (depth 0 touches the corner itself)."""
        t = self.x[tri_col(i, v)]
        if depth < t:
            return self.block_id[("corner", i, v, depth)]
        s = self.quad_sep[i]
        assert s is not None and s == sep_of_pair(v, f)
        k = depth - t
        if k == 0:
            return self.block_id[("tp", i, sep_side(s, v))]
        q = self.x[quad_col(i, s)]
        e = k if sep_side(s, v) == 0 else q - k
        return self.block_id[("qprism", i, e)]

    def central_region(self, i, f):
        s = self.quad_sep[i]
        if s is None:
            return self.block_id[("core", i)]
        return self.block_id[("tp", i, 1 - sep_side(s, f))]

    def touches_sphere(self, block):
        i = block[1]
        return any(self.x[7 * i + c] for c in range(7))


def _complement_components(tri, x, finder):
    """Union-find of blocks across all face gluings."""
    parent = list(range(len(finder.blocks)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    sk = compute_skeleton(tri)
    for cls in sk.face_classes:
        if len(cls) != 2:
            continue
        (i, f), (j, g) = cls
        p = tri.gluing(i, f)[2]
        for v in range(4):
            if v == f:
                continue
            count = arc_count(x, i, f, v)
            for depth in range(count):
                union(finder.corner_region(i, f, v, depth),
                      finder.corner_region(j, g, p[v], depth))
        union(finder.central_region(i, f), finder.central_region(j, g))
    return [find(b) for b in range(len(finder.blocks))]


def _trace_face(tri, quad_sep, i, f):
    """Follow a survivor's face through flattened material to the
    survivor face it ends up glued to, composing the permutation."""
    j, g, perm = tri.gluing(i, f)
    steps = 0
    while quad_sep[j] is not None:
        steps += 1
        if steps > 8 * tri.n + 8:
            raise CrushFailure("trace-cycle",
                               "face ({},{}) never reached a survivor"
                               .format(i, f))
        g2 = sep_partner(quad_sep[j], g)
        tau = perms.transposition(g, g2)
        perm = perms.compose(tau, perm)
        j, g, step_perm = tri.gluing(j, g2)
        perm = perms.compose(step_perm, perm)
    return j, g, perm


def crush_sphere(tri, x):
    """Collapse a connected non-trivial normal 2-sphere and return the
    induced triangulations of the pieces it cuts off."""
    require_closed_orientable(tri)
    if not is_connected(tri):
        raise ValueError("crush needs a connected triangulation")
    surface = classify(tri, x)
    if not is_nontrivial_sphere(surface):
        raise ValueError(
            "crush needs a connected non-trivial normal 2-sphere, got "
            "kind={} connected={} vertex_linking={}".format(
                surface.kind, surface.connected, surface.vertex_linking))

    finder = _BlockFinder(tri, x)
    component_of = _complement_components(tri, x, finder)
    touching = sorted({component_of[b] for b, block in
                       enumerate(finder.blocks) if finder.touches_sphere(block)})
    if len(touching) not in (1, 2):
        raise CrushFailure(
            "sides", "sphere has {} sides".format(len(touching)))
    separating = len(touching) == 2

    quad_sep = finder.quad_sep
    survivors = [i for i in range(tri.n) if quad_sep[i] is None]
    destroyed = tuple(i for i in range(tri.n) if quad_sep[i] is not None)
    assert destroyed, "a non-trivial sphere carries a quad"

    # New gluings among survivors, by tracing each face once.
    new_gluing = {}
    for i in survivors:
        for f in range(4):
            j, g, perm = _trace_face(tri, quad_sep, i, f)
            if (j, g) == (i, f):
                raise CrushFailure(
                    "self-gluing",
                    "face ({},{}) traced back to itself".format(i, f))
            new_gluing[(i, f)] = (j, g, perm)
    for (i, f), (j, g, perm) in new_gluing.items():
        back = new_gluing.get((j, g))
        if back != (i, f, perms.inverse(perm)):
            raise CrushFailure(
                "trace-mismatch",
                "faces ({},{}) and ({},{}) traced inconsistently"
                .format(i, f, j, g))

    # Split survivors into connected summand complexes.
    comp_of_survivor = {}
    for i in survivors:
        comp_of_survivor[i] = component_of[finder.block_id[("core", i)]]
    groups = {}
    for i in survivors:
        groups.setdefault(comp_of_survivor[i], []).append(i)
    for comp, tets in groups.items():
        # The gluing graph inside one complement component must be
        # connected, or the collapse did not produce a summand.
        seen = {tets[0]}
        queue = [tets[0]]
        while queue:
            a = queue.pop()
            for f in range(4):
                b = new_gluing[(a, f)][0]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        if len(seen) != len(tets):
            raise CrushFailure(
                "disconnected-piece",
                "survivors of one side do not form a connected complex")

    outputs = []
    for comp in touching:
        tets = sorted(groups.get(comp, []))
        if not tets:
            outputs.append(Triangulation(0, {}))
            continue
        rename = {t: k for k, t in enumerate(tets)}
        gl = {}
        for t in tets:
            for f in range(4):
                j, g, perm = new_gluing[(t, f)]
                gl[(rename[t], f)] = (rename[j], perm)
        try:
            outputs.append(Triangulation(len(tets), gl))
        except Exception as exc:
            raise CrushFailure("regluing", str(exc))

    reports = tuple(validate(out) for out in outputs)
    for k, rep in enumerate(reports):
        if not (rep.is_manifold and rep.orientable and rep.closed):
            raise CrushFailure(
                "invalid-output",
                "output {} failed validation: {}".format(
                    k, "; ".join(rep.failures) or "not closed"))

    total_out = sum(out.n for out in outputs)
    assert total_out <= tri.n - len(destroyed) < tri.n

    expected = direct_sum(*(h1(out) for out in outputs))
    if not separating:
        expected = direct_sum(expected, HomologyGroup(1, ()))
    before = h1(tri)
    if before != expected:
        raise CrushFailure(
            "homology-ledger",
            "h1 {} became {}".format(before, expected))

    return CrushReport(
        input_tets=tri.n,
        sphere=tuple(x),
        separating=separating,
        outputs=tuple(outputs),
        destroyed_tets=destroyed,
        validations=reports)
