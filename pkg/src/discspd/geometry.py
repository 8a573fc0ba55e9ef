"""Points on complex spheres and products of them.

Inner products are linear in the first argument and conjugate-linear in the
second, ``inner(z, w) = sum_i z_i conj(w_i)``, so ``inner(z, e^{it} z) = e^{-it}``.

Antipodality is tested numerically: two distinct points are antipodal when
``|inner(z, w)| >= 1 - tol``.  Pairs whose inner product has modulus in
``(1 - tol, 1)`` are therefore treated as antipodal even though they are not;
near-degenerate inputs are the caller's responsibility.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionError, DomainError, ValidationError
from .polynomials import INF

NORM_TOL = 1e-12
ANTIPODAL_TOL = 1e-10
EQUAL_TOL = 1e-10
ANGLE_TOL = 1e-12


class SpherePoint:
    """A unit vector in C^dim, stored as a read-only complex array."""

    __slots__ = ("coords",)

    def __init__(self, coords, *, tol: float = NORM_TOL):
        arr = np.array(coords, dtype=complex).reshape(-1)
        if arr.size < 1:
            raise DimensionError("a sphere point needs at least one coordinate")
        norm = float(np.linalg.norm(arr))
        if abs(norm - 1.0) > tol:
            raise DomainError(f"point has norm {norm!r}, expected 1")
        arr.setflags(write=False)
        self.coords = arr

    @property
    def dim(self) -> int:
        return self.coords.size

    def rotate(self, theta: float) -> "SpherePoint":
        """The point e^{i theta} z."""
        return SpherePoint(cmath.exp(1j * theta) * self.coords)

    def __eq__(self, other):
        if not isinstance(other, SpherePoint):
            return NotImplemented
        return self.dim == other.dim and bool(np.all(self.coords == other.coords))

    def __hash__(self):
        return hash(self.coords.tobytes())

    def __repr__(self):
        return f"SpherePoint({self.coords.tolist()!r})"

    @classmethod
    def basis(cls, dim: int, index: int = 0) -> "SpherePoint":
        coords = np.zeros(dim, dtype=complex)
        coords[index] = 1.0
        return cls(coords)


@dataclass(frozen=True)
class ProductPoint:
    z: SpherePoint
    w: SpherePoint


def inner(z: SpherePoint, z2: SpherePoint) -> complex:
    if z.dim != z2.dim:
        raise DimensionError(f"dimension mismatch: {z.dim} vs {z2.dim}")
    return complex(np.vdot(z2.coords, z.coords))


def close(z: SpherePoint, z2: SpherePoint, tol: float = EQUAL_TOL) -> bool:
    """Componentwise equality within ``tol``."""
    return z.dim == z2.dim and bool(np.max(np.abs(z.coords - z2.coords)) <= tol)


def check_sphere_dim(z: SpherePoint, q) -> None:
    if q != INF and z.dim != q:
        raise DimensionError(f"point of dimension {z.dim} on a sphere with q = {q}")


def check_product_point(u: ProductPoint, q, p) -> None:
    check_sphere_dim(u.z, q)
    check_sphere_dim(u.w, p)


def check_point_set(points: Sequence[ProductPoint], q, p) -> None:
    """Dimensions match (q, p) and are consistent across the list."""
    if not points:
        return
    dz, dw = points[0].z.dim, points[0].w.dim
    for u in points:
        check_product_point(u, q, p)
        if u.z.dim != dz or u.w.dim != dw:
            raise DimensionError("inconsistent point dimensions")


def sample_uniform(dim: int, rng: np.random.Generator) -> SpherePoint:
    """Draw from the unitarily invariant probability measure on the unit sphere of C^dim."""
    if dim < 1:
        raise DimensionError("dim must be positive")
    x = rng.standard_normal(2 * dim)
    coords = x[:dim] + 1j * x[dim:]
    return SpherePoint(coords / np.linalg.norm(coords))


def sample_product(q_dim: int, p_dim: int, rng: np.random.Generator) -> ProductPoint:
    return ProductPoint(sample_uniform(q_dim, rng), sample_uniform(p_dim, rng))


def is_antipodal(z: SpherePoint, z2: SpherePoint, tol: float = ANTIPODAL_TOL) -> bool:
    """True when z2 = e^{i theta} z for some theta in (0, 2 pi), up to ``tol``."""
    return abs(inner(z, z2)) >= 1 - tol and not close(z, z2, tol)


def check_antipodal_free(base: Sequence[ProductPoint], tol: float = ANTIPODAL_TOL) -> None:
    """Raise unless ``base`` has the antipodal-free property.

    For distinct indices, first coordinates are either equal or have inner
    product of modulus < 1, and likewise for second coordinates.
    """
    for i, u in enumerate(base):
        for j in range(i):
            v = base[j]
            if close(u.z, v.z) and close(u.w, v.w):
                raise ValidationError(f"base points {j} and {i} coincide")
            if is_antipodal(u.z, v.z, tol):
                raise ValidationError(f"first coordinates of points {j} and {i} are antipodal")
            if is_antipodal(u.w, v.w, tol):
                raise ValidationError(f"second coordinates of points {j} and {i} are antipodal")


def _check_angles(angles: Sequence[float], name: str) -> None:
    for a in angles:
        if not 0.0 <= a < 2 * math.pi:
            raise ValidationError(f"{name} angle {a!r} outside [0, 2 pi)")
    ordered = sorted(angles)
    for a, b in zip(ordered, ordered[1:]):
        if b - a <= ANGLE_TOL:
            raise ValidationError(f"{name} angles {a!r} and {b!r} coincide")
    if len(ordered) > 1 and ordered[0] + 2 * math.pi - ordered[-1] <= ANGLE_TOL:
        raise ValidationError(f"{name} angles wrap onto each other")


@dataclass(frozen=True)
class EnhancedSpec:
    """Antipodal-free base set Y with first- and second-coordinate rotation angles."""

    base: tuple
    thetas: tuple
    deltas: tuple

    def check(self) -> "EnhancedSpec":
        check_antipodal_free(self.base)
        _check_angles(self.thetas, "theta")
        _check_angles(self.deltas, "delta")
        return self


def enhance(spec: EnhancedSpec) -> list[ProductPoint]:
    """All points (e^{i theta} z, e^{i delta} w); base point outermost, delta innermost."""
    spec.check()
    return [
        ProductPoint(u.z.rotate(theta), u.w.rotate(delta))
        for u in spec.base
        for theta in spec.thetas
        for delta in spec.deltas
    ]


def _phase_classes(coords: Sequence[SpherePoint], tol: float):
    reps: list[SpherePoint] = []
    angles = [0.0]
    for z in coords:
        for y in reps:
            if close(z, y, tol):
                break
            ip = inner(z, y)
            if abs(ip) >= 1 - tol:
                theta = cmath.phase(ip) % (2 * math.pi)
                if theta >= 2 * math.pi - ANGLE_TOL:
                    theta = 0.0
                if all(_angle_gap(theta, a) > 1e-9 for a in angles):
                    angles.append(theta)
                break
        else:
            reps.append(z)
    return reps, sorted(angles)


def _angle_gap(a: float, b: float) -> float:
    d = abs(a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def antipodal_free_decompose(
    points: Sequence[ProductPoint], tol: float = ANTIPODAL_TOL
) -> EnhancedSpec:
    """Greedy decomposition whose enhanced set contains ``points``.

    First coordinates are scanned in input order; each one either starts a new
    representative or is recorded as a phase rotation of an earlier one.  The
    same is done for second coordinates, and the base is the product of the two
    representative lists.
    """
    reps_z, thetas = _phase_classes([u.z for u in points], tol)
    reps_w, deltas = _phase_classes([u.w for u in points], tol)
    base = tuple(ProductPoint(z, w) for z in reps_z for w in reps_w)
    return EnhancedSpec(base, tuple(thetas), tuple(deltas))


def contains_point(points: Sequence[ProductPoint], u: ProductPoint, tol: float = EQUAL_TOL) -> bool:
    return any(close(u.z, v.z, tol) and close(u.w, v.w, tol) for v in points)
