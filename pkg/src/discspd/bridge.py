"""Coefficient correspondences between real circles/tori and Omega_2 (x Omega_2).

A conjugation-invariant PD function on the torus, sum a_{m,k} xi^m eta^k with
a_{m,k} = a_{-m,k} = a_{m,-k}, equals the cosine expansion
sum ahat_{m,k} cos(m phi) cos(k psi) with ahat_{0,0} = a_{0,0},
ahat_{m,0} = 2 a_{m,0}, ahat_{0,k} = 2 a_{0,k} and ahat_{m,k} = 4 a_{m,k}.
Scaling by powers of two is exact in floating point, so round trips are exact.
"""
from __future__ import annotations

from typing import Mapping, Optional

import numpy as np

from .errors import SymmetryError, ValidationError
from .lattice import (
    Coset1D,
    CosetProduct,
    IndexSet1D,
    IndexSet2D,
    SpdVerdict,
    SpdVerdict1D,
    decide_spd_condition,
    decide_spd_condition_1d,
)
from .spectrum import ProductExpansion, circle_rearrange


def _clean(coeffs: Mapping, nonneg: bool) -> dict:
    out = {}
    for key, a in coeffs.items():
        a = float(a)
        if not np.isfinite(a) or a < 0:
            raise ValidationError(f"coefficient {key}: {a!r} is not a nonnegative number")
        if nonneg and min(np.atleast_1d(key)) < 0:
            raise ValidationError(f"cosine index {key} must be nonnegative")
        if a > 0:
            out[key] = a
    return out


def _key2(key) -> tuple:
    m, k = key
    return (int(m), int(k))


def cos_to_torus(coeffs: Mapping) -> dict:
    """Cosine coefficients ahat_{m,k} (m, k >= 0) to symmetric torus coefficients."""
    c = _clean({_key2(key): a for key, a in coeffs.items()}, nonneg=True)
    out = {}
    for (m, k), a in c.items():
        share = a / ((2 if m else 1) * (2 if k else 1))
        for sm in {m, -m}:
            for sk in {k, -k}:
                out[sm, sk] = share
    return dict(sorted(out.items()))


def torus_to_cos(coeffs: Mapping) -> dict:
    """Inverse of :func:`cos_to_torus`; the four-fold symmetry is checked exactly."""
    t = _clean({_key2(key): a for key, a in coeffs.items()}, nonneg=False)
    out = {}
    for (m, k), a in t.items():
        orbit = {(sm, sk) for sm in {m, -m} for sk in {k, -k}}
        values = {t.get(o, 0.0) for o in orbit}
        if len(values) != 1:
            raise SymmetryError(
                "asymmetric orbit "
                + ", ".join(f"{o}: {t.get(o, 0.0)!r}" for o in sorted(orbit))
            )
        out[abs(m), abs(k)] = a * len(orbit)
    return dict(sorted(out.items()))


def circle_to_cos(coeffs: Mapping[int, float]) -> dict:
    """Bilateral coefficients a_m (a_m = a_{-m}) to cosine coefficients on [-1, 1]."""
    a = _clean({int(m): v for m, v in coeffs.items()}, nonneg=False)
    out = {}
    for m, v in a.items():
        if a.get(-m, 0.0) != v:
            raise SymmetryError(f"asymmetric pair a[{m}] = {v!r}, a[{-m}] = {a.get(-m, 0.0)!r}")
        out[abs(m)] = v if m == 0 else 2 * v
    return dict(sorted(out.items()))


def cos_to_circle(coeffs: Mapping[int, float]) -> dict:
    c = _clean({int(m): v for m, v in coeffs.items()}, nonneg=True)
    out = {}
    for m, v in c.items():
        if m == 0:
            out[0] = v
        else:
            out[m] = out[-m] = v / 2
    return dict(sorted(out.items()))


def torus_to_product(coeffs: Mapping) -> ProductExpansion:
    """Torus coefficients as a q = p = 1 product expansion (circle rearrangement per variable)."""
    out = {}
    for (m, k), a in coeffs.items():
        (mm, mn), = circle_rearrange({m: 1.0})
        (kk, kl), = circle_rearrange({k: 1.0})
        out[mm, mn, kk, kl] = float(a)
    return ProductExpansion(1, 1, out)


def eval_cos(coeffs: Mapping, phi, psi):
    """sum ahat_{m,k} cos(m phi) cos(k psi)."""
    phi, psi = np.broadcast_arrays(np.asarray(phi, float), np.asarray(psi, float))
    total = np.zeros(phi.shape)
    for (m, k), a in sorted(coeffs.items()):
        total += a * np.cos(m * phi) * np.cos(k * psi)
    return total


def symmetrize(s: IndexSet2D) -> IndexSet2D:
    """Index set with the same progression verdict as {(m, k) : (|m|, |k|) in s}.

    ``s`` describes a family of cosine indices; only its part in Z_+^2 is
    meaningful.  Each coset product is replaced by its four sign-flipped
    copies.  This union is larger than the exact mirror image, but any
    progression product it meets is met by one of the copies in a coset
    product, which is unbounded in every quadrant, so the mirror image meets it
    as well.  Finite points are mirrored exactly.
    """
    cosets = []
    for c in s.cosets:
        for sx in (1, -1):
            for sy in (1, -1):
                cp = CosetProduct.of(c.N, sx * c.x, c.M, sy * c.y)
                if cp not in cosets:
                    cosets.append(cp)
    points = {
        (sm * m, sk * k) for m, k in s.points if m >= 0 and k >= 0 for sm in (1, -1) for sk in (1, -1)
    }
    return IndexSet2D(tuple(cosets), frozenset(points))


def spd_condition_real(
    coeffs: Optional[Mapping] = None, index_set: Optional[IndexSet2D] = None
) -> SpdVerdict:
    """Progression criterion for a PD function on S^1 x S^1.

    Give either finite cosine coefficients or, for an infinite family, the
    already symmetrized index set {(m, k) : ahat_{|m|,|k|} > 0}.
    """
    if (coeffs is None) == (index_set is None):
        raise ValidationError("give exactly one of coeffs or index_set")
    if index_set is None:
        c = _clean({_key2(key): a for key, a in coeffs.items()}, nonneg=True)
        points = {(sm * m, sk * k) for m, k in c for sm in (1, -1) for sk in (1, -1)}
        index_set = IndexSet2D(points=frozenset(points))
    return decide_spd_condition(index_set)


def spd_condition_real_1d(
    coeffs: Optional[Mapping] = None, index_set: Optional[IndexSet1D] = None
) -> SpdVerdict1D:
    """Progression criterion for a PD function on S^1: {m : ahat_|m| > 0}."""
    if (coeffs is None) == (index_set is None):
        raise ValidationError("give exactly one of coeffs or index_set")
    if index_set is None:
        c = _clean({int(m): a for m, a in coeffs.items()}, nonneg=True)
        index_set = IndexSet1D(points=frozenset(s * m for m in c for s in (1, -1)))
    return decide_spd_condition_1d(index_set)


def symmetrize_1d(s: IndexSet1D) -> IndexSet1D:
    cosets = []
    for c in s.cosets:
        for cs in (c, Coset1D(c.N, -c.x)):
            if cs not in cosets:
                cosets.append(cs)
    points = {sm * m for m in s.points if m >= 0 for sm in (1, -1)}
    return IndexSet1D(tuple(cosets), frozenset(points))
