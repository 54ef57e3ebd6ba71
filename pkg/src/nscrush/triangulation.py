"""Tetrahedral gluing complexes and their file format.

Conventions, frozen for every module and file format in this package:

* Tetrahedra are indexed 0..n-1 and their vertices are labelled 0..3.
* Face f of a tetrahedron is the face opposite vertex f, so face f
  carries the three vertex labels other than f.
* A gluing of face f of tet i to tet j is a permutation p of {0,1,2,3}
  acting on vertex labels; it must send face f onto the face of j
  labelled p(f), i.e. the glued face of j is g = p(f).
* The gluing relation is a fixed-point-free involution: if (i,f) glues
  to (j,g) via p then (j,g) glues to (i,f) via p^-1, and no face is
  glued to itself.
* n = 0 is a legal triangulation and denotes the standard 3-sphere.
  (Crushing can consume every tetrahedron of a 3-sphere summand; the
  empty complex keeps the decomposition algebra total.)

Gluing file format (UTF-8 text)::

    # comment
    tets <n>
    <i> <f> : <j> <g> <p0p1p2p3>

Each gluing line says face f of tet i glues to face g of tet j via the
permutation k -> pk; g must equal p(f).  Unlisted faces are boundary.
The serializer emits each gluing once, from its lexicographically
smaller (i, f) side, sorted by (i, f).
"""

from . import perms
from .errors import GluingFormatError, InvolutionError


class Triangulation:
    """An immutable gluing complex.

    `gluings` maps (tet, face) to (other tet, permutation); both
    directions of every gluing are stored.  Faces absent from the map
    are boundary faces.
    """

    def __init__(self, n, gluings):
        if n < 0:
            raise ValueError("negative tetrahedron count")
        table = {}
        for (i, f), (j, p) in dict(gluings).items():
            p = tuple(p)
            self._check_record(n, i, f, j, p)
            table[(i, f)] = (j, p)
        # Close up under involution, rejecting inconsistencies.
        for (i, f), (j, p) in list(table.items()):
            g = p[f]
            back = table.get((j, g))
            if back is None:
                table[(j, g)] = (i, perms.inverse(p))
            elif back != (i, perms.inverse(p)):
                raise InvolutionError(
                    "faces ({},{}) and ({},{}) disagree about their gluing"
                    .format(i, f, j, g),
                    faces=((i, f), (j, g)))
        self.n = n
        self._glue = table

    @staticmethod
    def _check_record(n, i, f, j, p):
        if not (0 <= i < n and 0 <= j < n):
            raise InvolutionError(
                "tetrahedron index out of range in gluing ({},{}) -> {}"
                .format(i, f, j))
        if not (0 <= f <= 3):
            raise InvolutionError("face index {} out of range".format(f))
        if not perms.is_perm(p):
            raise InvolutionError("not a permutation: {}".format(p))
        if (j, p[f]) == (i, f):
            raise InvolutionError(
                "face ({},{}) glued to itself".format(i, f),
                faces=((i, f), (i, f)))

    def gluing(self, i, f):
        """Return (j, g, p) for the face glued to (i, f), or None."""
        rec = self._glue.get((i, f))
        if rec is None:
            return None
        j, p = rec
        return (j, p[f], p)

    def is_boundary_face(self, i, f):
        return (i, f) not in self._glue

    def gluing_records(self):
        """All gluings, one record per glued face pair, sorted by the
        lexicographically smaller (i, f) side."""
        out = []
        for (i, f), (j, p) in sorted(self._glue.items()):
            if (i, f) <= (j, p[f]):
                out.append((i, f, j, p[f], p))
        return out

    def relabelled(self, tet_map, vertex_maps):
        """Rebuild with tet i renamed tet_map[i] and its vertex labels
        permuted by vertex_maps[i].  Used for invariance tests."""
        gl = {}
        for (i, f), (j, p) in self._glue.items():
            si, sj = vertex_maps[i], vertex_maps[j]
            q = perms.compose(sj, perms.compose(p, perms.inverse(si)))
            gl[(tet_map[i], si[f])] = (tet_map[j], q)
        return Triangulation(self.n, gl)

    def __eq__(self, other):
        return (isinstance(other, Triangulation)
                and self.n == other.n and self._glue == other._glue)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self._glue.items()))))

    def __repr__(self):
        return "Triangulation(n={}, gluings={})".format(
            self.n, len(self.gluing_records()))


def parse_triangulation(text):
    """Parse gluing-file content into a Triangulation."""
    n = None
    gluings = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "tets":
                raise GluingFormatError(
                    "expected 'tets <n>', got {!r}".format(line), lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise GluingFormatError(
                    "bad tetrahedron count {!r}".format(parts[1]), lineno)
            if n < 0:
                raise GluingFormatError("negative tetrahedron count", lineno)
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise GluingFormatError("missing ':' in gluing line", lineno)
        try:
            i, f = (int(w) for w in head.split())
        except ValueError:
            raise GluingFormatError(
                "bad face reference {!r}".format(head.strip()), lineno)
        parts = tail.split()
        if len(parts) != 3:
            raise GluingFormatError(
                "expected '<j> <g> <p0p1p2p3>' after ':'", lineno)
        try:
            j, g = int(parts[0]), int(parts[1])
        except ValueError:
            raise GluingFormatError("bad target face reference", lineno)
        word = parts[2]
        if len(word) != 4 or not word.isdigit():
            raise GluingFormatError(
                "permutation must be 4 digits, got {!r}".format(word), lineno)
        p = tuple(int(c) for c in word)
        if not perms.is_perm(p):
            raise GluingFormatError(
                "not a permutation of 0123: {!r}".format(word), lineno)
        if n is not None and not (0 <= i < n and 0 <= j < n):
            raise GluingFormatError(
                "tetrahedron index out of range 0..{}".format(n - 1), lineno)
        if not (0 <= f <= 3 and 0 <= g <= 3):
            raise GluingFormatError("face index out of range 0..3", lineno)
        if p[f] != g:
            raise GluingFormatError(
                "permutation sends face {} to face {}, not {}"
                .format(f, p[f], g), lineno)
        prev = gluings.get((i, f))
        if prev is not None and prev != (j, p):
            raise GluingFormatError(
                "face ({},{}) glued twice".format(i, f), lineno)
        gluings[(i, f)] = (j, p)
    if n is None:
        raise GluingFormatError("missing 'tets <n>' header")
    return Triangulation(n, gluings)


def serialize_triangulation(tri):
    """Canonical gluing-file form; parse(serialize(t)) == t."""
    lines = ["tets {}".format(tri.n)]
    for i, f, j, g, p in tri.gluing_records():
        lines.append("{} {} : {} {} {}{}{}{}".format(i, f, j, g, *p))
    return "\n".join(lines) + "\n"
