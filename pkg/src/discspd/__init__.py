"""Disc polynomial kernels on products of complex spheres and their strict positive definiteness."""
from .bridge import cos_to_torus, spd_condition_real, torus_to_cos
from .errors import (
    CapacityError,
    DiscSpdError,
    DomainError,
    DuplicatePointsError,
    ProgressionError,
    SymmetryError,
    ValidationError,
)
from .geometry import ProductPoint, SpherePoint, antipodal_free_decompose, enhance, inner
from .gram import build_A, build_B, min_eigenvalue, quadratic_form, spd_witness
from .lattice import (
    Coset1D,
    CosetProduct,
    IndexSet1D,
    IndexSet2D,
    decide_spd_condition,
    decide_spd_condition_1d,
    intersects,
)
from .polynomials import INF, disc_poly, jacobi_normalized
from .spectrum import ProductExpansion, eval_f, index_shadow, kernel_value, validate

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "Coset1D",
    "CosetProduct",
    "DiscSpdError",
    "DomainError",
    "DuplicatePointsError",
    "INF",
    "IndexSet1D",
    "IndexSet2D",
    "ProductExpansion",
    "ProductPoint",
    "ProgressionError",
    "SpherePoint",
    "SymmetryError",
    "ValidationError",
    "antipodal_free_decompose",
    "build_A",
    "build_B",
    "cos_to_torus",
    "decide_spd_condition",
    "decide_spd_condition_1d",
    "disc_poly",
    "enhance",
    "eval_f",
    "index_shadow",
    "inner",
    "intersects",
    "jacobi_normalized",
    "kernel_value",
    "min_eigenvalue",
    "quadratic_form",
    "spd_condition_real",
    "spd_witness",
    "torus_to_cos",
    "validate",
]
