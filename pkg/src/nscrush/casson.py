"""Iterated sphere-crushing: decomposition into irreducible pieces.

The driver keeps a worklist of pending triangulations.  For each one
it looks for a non-trivial normal sphere — the cheap restricted search
(quads in at most 2 tetrahedra) first, the full vertex enumeration
only as a fallback — crushes it, and queues the resulting pieces.
Every crush strictly lowers the total tetrahedron count, so the loop
terminates.  A piece with no non-trivial normal sphere among its
vertex solutions is a leaf: irreducible or a 3-sphere.

First homology is the correctness ledger: the input's H1 must equal
the direct sum over the leaves, plus one Z for every non-separating
crush (each of those peels off an S2 x S1 factor, which is counted
rather than triangulated).
"""

from dataclasses import dataclass

from .crush import crush_sphere
from .errors import CrushFailure, DecompositionError
from .homology import HomologyGroup, direct_sum, h1
from .skeleton import require_closed_orientable
from .spheres import (full_sphere_search, pattern_count,
                      restricted_sphere_search)
from .surfaces import classify, euler_weighted, is_nontrivial_sphere, quad_col
from .enumeration import vertex_solutions


@dataclass(frozen=True)
class CrushStep:
    piece: int              # id of the piece that was crushed
    parent: int             # id of the piece it came from (-1 for root)
    tets: int
    sphere: tuple
    mode: str               # which search produced the sphere
    retries: int            # candidate spheres that failed before this one
    report: object          # CrushReport
    children: tuple         # piece ids of the outputs


@dataclass(frozen=True)
class Leaf:
    piece: int
    parent: int
    triangulation: object
    homology: object


@dataclass(frozen=True)
class DecompositionReport:
    root: object
    steps: tuple
    leaves: tuple
    s2xs1_factors: int
    dropped_trivial: int

    @property
    def leaf_homology_sum(self):
        groups = [leaf.homology for leaf in self.leaves]
        groups += [HomologyGroup(1, ())] * self.s2xs1_factors
        return direct_sum(*groups)

    def homology_balanced(self):
        return h1(self.root) == self.leaf_homology_sum

    @property
    def restricted_hits(self):
        return sum(1 for s in self.steps if s.mode == "restricted")

    @property
    def full_hits(self):
        return sum(1 for s in self.steps if s.mode == "full")


def _sphere_candidates(tri):
    """All connected non-trivial normal spheres among the vertex
    solutions, in canonical order; the retry pool after a CrushFailure."""
    out = []
    for x in vertex_solutions(tri):
        if not any(x[quad_col(i, s)] for i in range(tri.n) for s in range(3)):
            continue
        if euler_weighted(tri, x) != 2:
            continue
        if is_nontrivial_sphere(classify(tri, x)):
            out.append(x)
    return out


def decompose(tri, restricted_k=2):
    """Decompose a closed orientable triangulation into sphere-free
    pieces by repeated crushing."""
    require_closed_orientable(tri)
    steps = []
    leaves = []
    s2xs1 = 0
    dropped = 0
    next_id = 1
    worklist = [(0, -1, tri)]
    total = tri.n
    while worklist:
        piece_id, parent, piece = worklist.pop(0)
        if piece.n == 0:
            dropped += 1
            continue
        result = restricted_sphere_search(piece, restricted_k)
        if not result.found:
            result = full_sphere_search(piece)
        if not result.found:
            leaves.append(Leaf(piece_id, parent, piece, h1(piece)))
            continue

        report = None
        retries = 0
        failures = []
        tried = set()
        candidates = [result.sphere]
        extended = False
        while candidates:
            sphere = candidates.pop(0)
            if sphere in tried:
                continue
            tried.add(sphere)
            try:
                report = crush_sphere(piece, sphere)
                break
            except CrushFailure as failure:
                failures.append((sphere, failure))
                retries += 1
                if not extended:
                    candidates.extend(_sphere_candidates(piece))
                    extended = True
        if report is None:
            raise DecompositionError(
                "piece {} ({} tets): every candidate sphere failed to "
                "crush: {}".format(
                    piece_id, piece.n,
                    "; ".join(str(f) for _s, f in failures)))

        if not report.separating:
            s2xs1 += 1
        child_ids = []
        for out in report.outputs:
            child_ids.append(next_id)
            worklist.append((next_id, piece_id, out))
            next_id += 1
        new_total = total - piece.n + sum(o.n for o in report.outputs)
        assert new_total < total, "crushing must lower the tet count"
        total = new_total
        steps.append(CrushStep(
            piece=piece_id, parent=parent, tets=piece.n,
            sphere=report.sphere, mode=result.mode, retries=retries,
            report=report, children=tuple(child_ids)))

    decomposition = DecompositionReport(
        root=tri, steps=tuple(steps), leaves=tuple(leaves),
        s2xs1_factors=s2xs1, dropped_trivial=dropped)
    if not decomposition.homology_balanced():
        raise DecompositionError(
            "homology ledger out of balance: h1(root) = {}, leaves give {}"
            .format(h1(tri), decomposition.leaf_homology_sum))
    return decomposition


@dataclass(frozen=True)
class ReducibilityVerdict:
    verdict: str            # reducible | no-restricted-sphere | not-applicable
    tets: int
    certificate: tuple      # sphere vector when reducible, else None
    pattern: tuple
    enumerations: int
    system_rows: int
    assumption: str

    @property
    def applicable(self):
        return self.verdict != "not-applicable"


_MINIMALITY_NOTE = (
    "verdict 'no-restricted-sphere' certifies irreducibility only under "
    "the caller-supplied assumption that the triangulation is minimal "
    "with more than 4 tetrahedra")


def check_reducible_minimal(tri, assume_minimal=False):
    """Polynomial-work reducibility check for minimal triangulations.

    Runs the restricted sphere search (quads in at most 2 distinct
    tetrahedra): a hit is a reducibility certificate outright; a miss
    means irreducible provided the triangulation really is minimal,
    an assumption this routine never verifies itself.  Below 5
    tetrahedra the underlying theorem does not apply and the verdict
    is 'not-applicable'.
    """
    require_closed_orientable(tri)
    note = _MINIMALITY_NOTE
    if assume_minimal:
        note += " (assumption supplied by caller)"
    if tri.n <= 4:
        return ReducibilityVerdict(
            verdict="not-applicable", tets=tri.n, certificate=None,
            pattern=None, enumerations=0, system_rows=0, assumption=note)
    result = restricted_sphere_search(tri, 2)
    assert result.enumerations == pattern_count(tri.n, 2)
    verdict = "reducible" if result.found else "no-restricted-sphere"
    return ReducibilityVerdict(
        verdict=verdict, tets=tri.n, certificate=result.sphere,
        pattern=result.pattern, enumerations=result.enumerations,
        system_rows=result.system_rows, assumption=note)
