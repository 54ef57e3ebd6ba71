"""Exact-arithmetic normal surface engine for triangulated 3-manifolds.

Enumerate normal surfaces, locate non-trivial normal 2-spheres, crush
them to induced triangulations of the connected summands, and iterate
to decompose a closed orientable 3-manifold into irreducible pieces.
"""

from .triangulation import (Triangulation, parse_triangulation,
                            serialize_triangulation)
from .skeleton import (compute_skeleton, validate, euler_characteristic,
                       Skeleton, ValidationReport)
from .homology import (HomologyGroup, h1, boundary_matrices,
                       smith_normal_form, direct_sum)
from .surfaces import (matching_system, is_admissible, build_piece_complex,
                       classify, components, SurfaceClass)
from .enumeration import vertex_solutions, brute_force_solutions
from .spheres import restricted_sphere_search, full_sphere_search
from .crush import crush_sphere, CrushReport
from .casson import decompose, check_reducible_minimal

__version__ = "0.1.0"

__all__ = [
    "Triangulation", "parse_triangulation", "serialize_triangulation",
    "compute_skeleton", "validate", "euler_characteristic",
    "Skeleton", "ValidationReport",
    "HomologyGroup", "h1", "boundary_matrices", "smith_normal_form",
    "direct_sum",
    "matching_system", "is_admissible", "build_piece_complex",
    "classify", "components", "SurfaceClass",
    "vertex_solutions", "brute_force_solutions",
    "restricted_sphere_search", "full_sphere_search",
    "crush_sphere", "CrushReport",
    "decompose", "check_reducible_minimal",
    "__version__",
]
