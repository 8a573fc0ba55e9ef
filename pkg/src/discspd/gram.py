"""Gram matrices of product kernels, quadratic forms and non-SPD witnesses.

Layout: for points X = [x_1, ..., x_L] the matrix has entry
``A[nu, mu] = f(z_mu . z_nu, w_mu . w_nu)``, i.e. row nu and column mu.  With
the inner product conjugate-linear in its second slot this makes
``conj(c)^T A c = sum_{mu,nu} c_mu conj(c_nu) f(z_mu . z_nu, w_mu . w_nu)``, and
for a grid of roots-of-unity rotations each component matrix factors as
``conj(b)^T b``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DuplicatePointsError, NonHermitianError, ProgressionError, ValidationError
from .geometry import (
    EQUAL_TOL,
    ProductPoint,
    SpherePoint,
    check_antipodal_free,
    check_point_set,
)
from .lattice import CosetProduct, IndexSet2D, intersects
from .polynomials import INF, disc_poly
from .spectrum import ProductExpansion, eval_f, index_shadow

WITNESS_RTOL = 1e-9
HERMITIAN_TOL = 1e-12
IMAG_RTOL = 1e-10


@dataclass(frozen=True, eq=False)
class GramMatrix:
    entries: np.ndarray
    points: tuple
    source: Optional[ProductExpansion] = None

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    @property
    def hermitian_residual(self) -> float:
        return hermitian_residual(self.entries)


@dataclass(frozen=True, eq=False)
class Witness:
    progression: CosetProduct
    points: tuple
    coeffs: np.ndarray
    value: float
    tolerance: float
    gram: GramMatrix

    @property
    def verified(self) -> bool:
        return bool(np.linalg.norm(self.coeffs) > 0) and abs(self.value) <= self.tolerance


def hermitian_residual(a: np.ndarray) -> float:
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - a.conj().T)))


def _inner_matrices(X: Sequence[ProductPoint]):
    Z = np.array([u.z.coords for u in X])
    W = np.array([u.w.coords for u in X])
    # gz[nu, mu] = z_mu . z_nu
    return Z.conj() @ Z.T, W.conj() @ W.T


def _check_points(X: Sequence[ProductPoint], q, p) -> None:
    check_point_set(X, q, p)
    if len(X) < 2:
        return
    Z = np.array([u.z.coords for u in X])
    W = np.array([u.w.coords for u in X])
    for i in range(1, len(X)):
        dz = np.max(np.abs(Z[:i] - Z[i]), axis=1)
        dw = np.max(np.abs(W[:i] - W[i]), axis=1)
        hit = np.flatnonzero((dz <= EQUAL_TOL) & (dw <= EQUAL_TOL))
        if hit.size:
            raise DuplicatePointsError(f"points {int(hit[0])} and {i} coincide")


def build_A(e: ProductExpansion, X: Sequence[ProductPoint]) -> GramMatrix:
    e.checked()
    X = tuple(X)
    _check_points(X, e.q, e.p)
    if not X:
        return GramMatrix(np.zeros((0, 0), complex), X, e)
    gz, gw = _inner_matrices(X)
    return GramMatrix(np.asarray(eval_f(e, gz, gw)), X, e)


def build_B(q, p, m: int, n: int, k: int, l: int, X: Sequence[ProductPoint]) -> np.ndarray:  # noqa: E741
    """Component matrix of the single term R_{m,n}(xi) R_{k,l}(eta)."""
    X = tuple(X)
    _check_points(X, q, p)
    if not X:
        return np.zeros((0, 0), complex)
    gz, gw = _inner_matrices(X)
    return np.asarray(disc_poly(q, m, n, gz)) * np.asarray(disc_poly(p, k, l, gw))


def _entries(A) -> np.ndarray:
    return A.entries if isinstance(A, GramMatrix) else np.asarray(A, dtype=complex)


def quadratic_form(A, c) -> float:
    """Real part of conj(c)^T A c; the imaginary part is checked to be roundoff."""
    a = _entries(A)
    c = np.asarray(c, dtype=complex)
    if c.shape != (a.shape[0],):
        raise ValidationError(f"vector of length {c.size} for a {a.shape[0]}x{a.shape[0]} matrix")
    value = np.vdot(c, a @ c)
    scale = float(np.vdot(c, c).real) * abs(np.trace(a))
    if abs(value.imag) > IMAG_RTOL * max(scale, np.finfo(float).tiny):
        raise NonHermitianError(f"quadratic form has imaginary part {value.imag!r}")
    return float(value.real)


def additivity_residual(e: ProductExpansion, X: Sequence[ProductPoint], c) -> float:
    """|c*A c - sum_j a_j c*B_j c|, the defect of splitting A over the support."""
    A = build_A(e, X)
    c = np.asarray(c, dtype=complex)
    whole = np.vdot(c, A.entries @ c)
    parts = sum(
        a * np.vdot(c, build_B(e.q, e.p, *key, A.points) @ c) for key, a in e.coeffs.items()
    )
    return float(abs(whole - parts))


def min_eigenvalue(A) -> float:
    a = _entries(A)
    if a.size == 0:
        raise ValidationError("empty matrix")
    scale = max(1.0, float(np.max(np.abs(a))))
    if hermitian_residual(a) > 1e-10 * scale:
        raise NonHermitianError("matrix is not Hermitian")
    return float(np.linalg.eigvalsh((a + a.conj().T) / 2)[0])


def default_base(q, p, inf_dim: int = 2) -> ProductPoint:
    """The pair of first standard basis vectors."""
    dz = inf_dim if q == INF else int(q)
    dw = inf_dim if p == INF else int(p)
    return ProductPoint(SpherePoint.basis(dz), SpherePoint.basis(dw))


def widen_progression(prog: CosetProduct) -> CosetProduct:
    """Replace a modulus 1 by 2 keeping the offset; the result is a sub-product."""
    N, x, M, y = prog.as_tuple()
    return CosetProduct.of(max(N, 2), x, max(M, 2), y)


def roots_of_unity_points(base: ProductPoint, N: int, M: int) -> list[ProductPoint]:
    """(e^{2 pi i tau/N} z, e^{2 pi i sigma/M} w) for tau = 1..N (outer), sigma = 1..M."""
    return [
        ProductPoint(base.z.rotate(2 * math.pi * tau / N), base.w.rotate(2 * math.pi * sigma / M))
        for tau in range(1, N + 1)
        for sigma in range(1, M + 1)
    ]


def roots_of_unity_vector(N: int, M: int, alpha: int, beta: int, sign: int = 1) -> np.ndarray:
    """Entries e^{sign 2 pi i alpha tau/N} e^{sign 2 pi i beta sigma/M}, same order as the points."""
    tau = np.arange(1, N + 1)[:, None]
    sigma = np.arange(1, M + 1)[None, :]
    return np.exp(sign * 2j * np.pi * (alpha * tau / N + beta * sigma / M)).reshape(-1)


def spd_witness(
    e: ProductExpansion,
    prog: CosetProduct,
    base: Optional[ProductPoint] = None,
    *,
    tol_scale: float = 1.0,
) -> Witness:
    """Points and coefficients making the Gram quadratic form vanish.

    Requires ``prog`` to miss the index shadow of ``e``.  On the grid of
    roots-of-unity rotations of ``base`` every component matrix is
    conj(b)^T b, and the chosen c is orthogonal to every b from the support.
    """
    e.checked()
    shadow = index_shadow(e)
    if intersects(IndexSet2D(points=shadow), prog):
        raise ProgressionError(f"progression {prog} meets the index shadow")
    prog = widen_progression(prog)
    if base is None:
        base = default_base(e.q, e.p)
    N, x, M, y = prog.as_tuple()
    X = roots_of_unity_points(base, N, M)
    c = roots_of_unity_vector(N, M, x, y, sign=-1)
    A = build_A(e, X)
    value = quadratic_form(A, c)
    tol = tol_scale * WITNESS_RTOL * e.total * N * M
    return Witness(prog, tuple(X), c, value, tol, A)


def diag_dominance_onset(base: Sequence[ProductPoint], q, p, degree_cap: int):
    """First degree d <= degree_cap at which every component matrix is dominant.

    For each d the matrices for all splits m + n = d with m != n and
    k + l = d with k != l are checked for strict diagonal dominance (the
    diagonal is 1, so every off-diagonal row sum must be < 1).  Returns the
    pair (d, d), or None when no degree up to the cap works.
    """
    base = tuple(base)
    check_antipodal_free(base)
    _check_points(base, q, p)
    if len(base) <= 1:
        return (1, 1) if degree_cap >= 1 else None
    gz, gw = _inner_matrices(base)
    off = ~np.eye(len(base), dtype=bool)
    for d in range(1, degree_cap + 1):
        splits = [(m, d - m) for m in range(d + 1) if 2 * m != d]
        rz = np.abs(np.array([disc_poly(q, m, n, gz) for m, n in splits])) * off
        rw = np.abs(np.array([disc_poly(p, k, l, gw) for k, l in splits]))
        # worst row sum over all split pairs: sum_nu |Rz[i]| * |Rw[j]|
        rows = np.einsum("iab,jab->ija", rz, rw)
        if float(rows.max()) < 1.0:
            return (d, d)
    return None

