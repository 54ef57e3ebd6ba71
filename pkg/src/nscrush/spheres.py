"""Locating non-trivial normal 2-spheres.

Two search modes:

* `restricted_sphere_search` scans every pattern of at most k
  tetrahedra marked with one quad type each (k defaults to 2).  With
  the quads pinned to a pattern the quadrilateral condition is no
  longer a disjunction, so each pattern yields a single convex cone
  and one double-description run; the pattern count is polynomial in
  the number of tetrahedra for fixed k (3n + 9n(n-1)/2 when k = 2).
* `full_sphere_search` classifies every admissible vertex solution.
  Coming back empty certifies that the triangulation carries no
  non-trivial normal 2-sphere at all (a non-trivial sphere, when one
  exists, always appears among the vertex solutions).

Neither search exits early: all patterns are always enumerated, the
result is the canonically first hit, and the executed enumeration
count is reported so callers can assert the work bound.
"""

import itertools
from dataclasses import dataclass

from .dd import ConeState
from .enumeration import vertex_solutions
from .skeleton import require_closed_orientable
from .surfaces import (classify, euler_weighted, is_nontrivial_sphere,
                       matching_system, quad_col, quad_support, tri_col)


@dataclass(frozen=True)
class SphereSearchResult:
    sphere: tuple            # coordinate vector, or None
    pattern: tuple           # ((tet, sep), ...) for restricted mode, else None
    mode: str                # 'restricted' | 'full'
    enumerations: int        # cone enumerations executed
    system_rows: int         # rows in each enumerated system
    supplement_fired: bool = False

    @property
    def found(self):
        return self.sphere is not None


def pattern_count(n, k):
    """Number of quad-support patterns of size 1..k on n tetrahedra."""
    total = 0
    for size in range(1, k + 1):
        total += (3 ** size) * _binomial(n, size)
    return total


def _binomial(n, m):
    if m > n:
        return 0
    out = 1
    for i in range(m):
        out = out * (n - i) // (i + 1)
    return out


def _patterns(n, k):
    """Quad-support patterns in canonical order: smaller sizes first,
    then ascending tetrahedron tuples, then separation tuples."""
    for size in range(1, k + 1):
        for tets in itertools.combinations(range(n), size):
            for seps in itertools.product(range(3), repeat=size):
                yield tuple(zip(tets, seps))


def _enumerate_pattern(tri, ms, pattern):
    """Extreme rays of the cone with quads allowed only on `pattern`."""
    state = ConeState()
    cols = [tri_col(i, v) for i in range(tri.n) for v in range(4)]
    cols += [quad_col(i, s) for (i, s) in pattern]
    state.add_columns(sorted(cols))
    for row in ms.rows:
        state.add_constraint(row)
    return sorted(state.vectors(7 * tri.n))


def _first_nontrivial_sphere(tri, rays):
    """Canonically first connected non-trivial normal sphere among the
    given rays.  Cheap prefilter first: a sphere needs a quadrilateral
    and Euler characteristic 2."""
    for x in rays:
        if not any(x):
            continue
        if not any(x[quad_col(i, s)] for i in range(tri.n) for s in range(3)):
            continue
        if euler_weighted(tri, x) != 2:
            continue
        if is_nontrivial_sphere(classify(tri, x)):
            return x
    return None


def restricted_sphere_search(tri, k=2):
    """Search for a connected non-trivial normal sphere whose quads
    touch at most k distinct tetrahedra.

    Every pattern is enumerated (no early exit, so the enumeration
    counter is exactly the pattern count); the returned sphere is the
    first in pattern-then-ray canonical order.  If no extreme ray of
    any pattern is a sphere, sums of ray pairs within each pattern are
    tried as a supplement and flagged when they produce the hit.
    """
    if k < 1:
        raise ValueError("k must be positive")
    require_closed_orientable(tri)
    n = tri.n
    ms = matching_system(tri)
    enumerations = 0
    per_pattern_rays = []
    hit = None
    hit_pattern = None
    for pattern in _patterns(n, k):
        rays = _enumerate_pattern(tri, ms, pattern)
        enumerations += 1
        per_pattern_rays.append((pattern, rays))
        if hit is None:
            sphere = _first_nontrivial_sphere(tri, rays)
            if sphere is not None:
                hit, hit_pattern = sphere, pattern
    supplement = False
    if hit is None:
        for pattern, rays in per_pattern_rays:
            sums = sorted(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in itertools.combinations(rays, 2))
            sphere = _first_nontrivial_sphere(tri, sums)
            if sphere is not None:
                hit, hit_pattern = sphere, pattern
                supplement = True
                break
    return SphereSearchResult(
        sphere=hit,
        pattern=hit_pattern,
        mode="restricted",
        enumerations=enumerations,
        system_rows=len(ms.rows),
        supplement_fired=supplement)


def full_sphere_search(tri):
    """Scan all vertex solutions for a connected non-trivial normal
    sphere.  An empty result certifies the triangulation 0-efficient
    (its only normal spheres are vertex links)."""
    require_closed_orientable(tri)
    rays = vertex_solutions(tri)
    sphere = _first_nontrivial_sphere(tri, rays)
    pattern = None
    if sphere is not None:
        pattern = tuple((i, s) for i in quad_support(sphere, tri.n)
                        for s in range(3) if sphere[quad_col(i, s)])
    return SphereSearchResult(
        sphere=sphere,
        pattern=pattern,
        mode="full",
        enumerations=1,
        system_rows=len(matching_system(tri).rows))
