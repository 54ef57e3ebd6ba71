"""Exact extreme-ray enumeration by the double description method.

The cones here are intersections of a non-negative orthant (over an
allowed column set) with hyperplanes through the origin.  Constraints
are added one at a time: rays on the hyperplane survive, and every
adjacent (positive, negative) pair contributes one integer combination
lying on it.  Adjacency uses the combinatorial test: a pair is
adjacent iff no other current ray's support is contained in the union
of the pair's supports.  All arithmetic is over Python integers, with
gcd rescaling as rays are created.

The pair-adjacency scan is the hot inner loop.  A compiled kernel
(`nscrush._ddcore`, built from Cython when available) runs it over
packed bitsets; the pure-Python fallback below is selected at import
time when the extension is missing.  Both produce identical output.
`benchmarks/bench_dd.py` compares the two.
"""

from math import gcd

try:
    from . import _ddcore
except ImportError:
    _ddcore = None

_active = "compiled" if _ddcore is not None else "pure"


def available_kernels():
    return ("pure", "compiled") if _ddcore is not None else ("pure",)


def active_kernel():
    return _active


def set_kernel(name):
    """Select 'pure' or 'compiled' (or 'auto'); returns the active name.

    Exists for the benchmark and for cross-checking the two backends;
    output never depends on the choice.
    """
    global _active
    if name == "auto":
        name = "compiled" if _ddcore is not None else "pure"
    if name not in ("pure", "compiled"):
        raise ValueError("unknown kernel {!r}".format(name))
    if name == "compiled" and _ddcore is None:
        raise RuntimeError("compiled kernel is not built")
    _active = name
    return _active


def _adjacent_pairs_pure(masks, pos, neg):
    out = []
    for a in pos:
        ma = masks[a]
        for b in neg:
            u = ma | masks[b]
            ok = True
            for w, mw in enumerate(masks):
                if (mw | u) == u and w != a and w != b:
                    ok = False
                    break
            if ok:
                out.append((a, b))
    return out


def _adjacent_pairs(masks, pos, neg, nbits):
    if not pos or not neg:
        return []
    if _active == "compiled":
        nwords = (nbits + 63) // 64 or 1
        blob = b"".join(m.to_bytes(8 * nwords, "little") for m in masks)
        return _ddcore.adjacent_pairs(blob, nwords, len(masks), pos, neg)
    return _adjacent_pairs_pure(masks, pos, neg)


def _normalized(vec):
    g = 0
    for c in vec:
        g = gcd(g, c)
    if g > 1:
        return tuple(c // g for c in vec)
    return tuple(vec)


class ConeState:
    """Extreme rays of an orthant-and-hyperplanes cone, built up
    incrementally.

    Columns are added in batches (appending unit rays); constraints are
    sparse rows over global column ids.  A constraint mentioning a
    column that was never added treats that column as pinned to zero.
    """

    __slots__ = ("cols", "pos_of", "rays", "masks")

    def __init__(self):
        self.cols = []
        self.pos_of = {}
        self.rays = []
        self.masks = []

    def copy(self):
        other = ConeState.__new__(ConeState)
        other.cols = list(self.cols)
        other.pos_of = dict(self.pos_of)
        other.rays = list(self.rays)
        other.masks = list(self.masks)
        return other

    def add_columns(self, cols):
        old_dim = len(self.cols)
        fresh = list(cols)
        for c in fresh:
            assert c not in self.pos_of
            self.pos_of[c] = len(self.cols)
            self.cols.append(c)
        pad = (0,) * len(fresh)
        self.rays = [r + pad for r in self.rays]
        for k in range(len(fresh)):
            unit = [0] * len(self.cols)
            unit[old_dim + k] = 1
            self.rays.append(tuple(unit))
            self.masks.append(1 << (old_dim + k))

    def add_constraint(self, row):
        """Intersect with {x : sum coeff * x[col] = 0}."""
        compressed = [(self.pos_of[c], k) for c, k in row if c in self.pos_of]
        if not compressed:
            return
        rays, masks = self.rays, self.masks
        dots = [sum(k * r[p] for p, k in compressed) for r in rays]
        pos = [i for i, d in enumerate(dots) if d > 0]
        neg = [i for i, d in enumerate(dots) if d < 0]
        if not pos and not neg:
            return
        new_rays = [rays[i] for i, d in enumerate(dots) if d == 0]
        new_masks = [masks[i] for i, d in enumerate(dots) if d == 0]
        for a, b in _adjacent_pairs(masks, pos, neg, len(self.cols)):
            da, db = dots[a], dots[b]
            ra, rb = rays[a], rays[b]
            combo = _normalized([da * y - db * x for x, y in zip(ra, rb)])
            new_rays.append(combo)
            new_masks.append(masks[a] | masks[b])
        self.rays = new_rays
        self.masks = new_masks

    def support_union(self):
        u = 0
        for m in self.masks:
            u |= m
        return u

    def column_alive(self, col):
        p = self.pos_of.get(col)
        return p is not None and (self.support_union() >> p) & 1 == 1

    def vectors(self, ncols):
        """Decompress to full-length gcd-normalized tuples."""
        out = []
        for ray in self.rays:
            full = [0] * ncols
            for c, val in zip(self.cols, ray):
                full[c] = val
            out.append(_normalized(full))
        return out


def extreme_rays(rows, ncols, allowed_cols):
    """Extreme rays of {x >= 0, x[c] = 0 outside allowed_cols,
    row . x = 0 for every row}, as gcd-normalized full-length tuples in
    a deterministic order."""
    state = ConeState()
    state.add_columns(sorted(allowed_cols))
    for row in rows:
        state.add_constraint(row)
    return state.vectors(ncols)
