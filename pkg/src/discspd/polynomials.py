"""Normalized Jacobi polynomials and disc (generalized Zernike) polynomials.

``disc_poly(q, m, n, xi)`` evaluates R^{q-2}_{m,n} on the closed unit disc for a
finite sphere parameter q >= 2, and the monomial xi^m conj(xi)^n for q = 1
(restricted to the unit circle) and q = inf.  Both functions accept scalars or
numpy arrays and return the same kind.
"""
from __future__ import annotations

import math
from typing import Union

import numpy as np

from .errors import DomainError, ValidationError

INF = math.inf
TOL_UNIT = 1e-12

SphereParam = Union[int, float]


def sphere_param(value) -> SphereParam:
    """Normalize a sphere parameter to an int >= 1 or ``INF``.

    Accepts ints, ``math.inf`` and the strings ``"inf"``/``"∞"``.
    """
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "∞"):
            return INF
        try:
            value = int(text)
        except ValueError:
            raise ValidationError(f"invalid sphere parameter {value!r}") from None
    if isinstance(value, bool):
        raise ValidationError(f"invalid sphere parameter {value!r}")
    if isinstance(value, float):
        if value == INF:
            return INF
        if not value.is_integer():
            raise ValidationError(f"invalid sphere parameter {value!r}")
        value = int(value)
    if not isinstance(value, (int, np.integer)) or value < 1:
        raise ValidationError(f"invalid sphere parameter {value!r}")
    return int(value)


def format_sphere_param(q: SphereParam):
    return "inf" if q == INF else int(q)


def _jacobi_unnormalized(k: int, alpha: int, beta: int, t: np.ndarray) -> np.ndarray:
    ab = alpha + beta
    prev = np.ones_like(t)
    if k == 0:
        return prev
    cur = (alpha + 1) + (ab + 2) * (t - 1) / 2
    for n in range(2, k + 1):
        s = 2 * n + ab
        a_n = 2 * n * (n + ab) * (s - 2)
        b_n = (s - 1) * (s * (s - 2) * t + alpha * alpha - beta * beta)
        c_n = 2 * (n + alpha - 1) * (n + beta - 1) * s
        prev, cur = cur, (b_n * cur - c_n * prev) / a_n
    return cur


def jacobi_normalized(k: int, alpha: int, beta: int, t):
    """Jacobi polynomial P_k^{(alpha, beta)}(t) scaled so its value at t = 1 is 1."""
    if k < 0:
        raise DomainError(f"degree must be nonnegative, got {k}")
    if alpha < 0 or beta < 0:
        raise DomainError(f"parameters must be nonnegative, got ({alpha}, {beta})")
    t_arr = np.asarray(t, dtype=float)
    if np.any(np.abs(t_arr) > 1 + TOL_UNIT):
        raise DomainError("argument outside [-1, 1]")
    t_arr = np.clip(t_arr, -1.0, 1.0)
    # P_k(1) = C(k + alpha, k); Python ints are exact, so no log-gamma path is needed
    value = _jacobi_unnormalized(k, alpha, beta, t_arr) / float(math.comb(k + alpha, k))
    if value.ndim == 0:
        return float(value)
    return value


def disc_poly(q, m: int, n: int, xi, *, tol: float = TOL_UNIT):
    """Disc polynomial R^{q-2}_{m,n}(xi).

    For finite q >= 2 this is r^|m-n| e^{i(m-n)phi} R_{min(m,n)}^{(q-2,|m-n|)}(2r^2-1)
    with xi = r e^{i phi}.  For q = 1 and q = inf it is xi^m conj(xi)^n; q = 1
    additionally requires |xi| = 1.
    """
    q = sphere_param(q)
    if m < 0 or n < 0:
        raise DomainError(f"indices must be nonnegative, got ({m}, {n})")
    xi_arr = np.asarray(xi, dtype=complex)
    r = np.abs(xi_arr)
    if np.any(r > 1 + tol):
        raise DomainError("point outside the closed unit disc")
    if q == 1 and np.any(r < 1 - tol):
        raise DomainError("q = 1 requires points on the unit circle")

    if q == 1 or q == INF:
        out = xi_arr**m * np.conj(xi_arr) ** n
    else:
        d = m - n
        t = np.clip(2.0 * r * r - 1.0, -1.0, 1.0)
        radial = np.asarray(jacobi_normalized(min(m, n), q - 2, abs(d), t))
        if d == 0:
            out = radial.astype(complex)
        else:
            # r^|d| e^{i d phi} taken as a power of xi (or its conjugate): no arg() needed
            angular = xi_arr**d if d > 0 else np.conj(xi_arr) ** (-d)
            out = angular * radial
            # r = 0 with m != n: the power of r kills the value whatever the phase
            out = np.where(r == 0.0, 0.0 + 0.0j, out)
    if out.ndim == 0:
        return complex(out)
    return out
