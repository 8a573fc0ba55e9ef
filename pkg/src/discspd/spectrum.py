"""Product expansions f(xi, eta) = sum a_{m,n,k,l} R^{q-2}_{m,n}(xi) R^{p-2}_{k,l}(eta)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

import numpy as np

from .errors import ValidationError
from .polynomials import TOL_UNIT, SphereParam, disc_poly, sphere_param


class CoeffKey(NamedTuple):
    m: int
    n: int
    k: int
    l: int  # noqa: E741


@dataclass(frozen=True)
class Violation:
    key: tuple
    rule: str

    def __str__(self):
        return f"{tuple(self.key)}: {self.rule}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


RULE_NEGATIVE_INDEX = "negative index"
RULE_NONPOSITIVE = "nonpositive coefficient"
RULE_NONFINITE = "non-finite coefficient"
RULE_Q1 = "m*n > 0 with q = 1"
RULE_P1 = "k*l > 0 with p = 1"


@dataclass(frozen=True)
class ProductExpansion:
    """Finite nonnegative coefficient family on a product of complex spheres.

    Exact zeros are dropped at construction; every other entry is kept so that
    :func:`validate` can report it.  Items are stored sorted by key, which fixes
    the summation order.
    """

    q: SphereParam
    p: SphereParam
    coeffs: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "q", sphere_param(self.q))
        object.__setattr__(self, "p", sphere_param(self.p))
        items = {}
        for key, a in dict(self.coeffs).items():
            key = CoeffKey(*(int(i) for i in key))
            a = float(a)
            if a == 0.0:
                continue
            items[key] = a
        object.__setattr__(self, "coeffs", dict(sorted(items.items())))

    @property
    def total(self) -> float:
        """Sum of the coefficients, the value of f at (1, 1)."""
        return float(sum(self.coeffs.values()))

    def __len__(self):
        return len(self.coeffs)

    def checked(self) -> "ProductExpansion":
        report = validate(self)
        if not report.ok:
            raise ValidationError("; ".join(str(v) for v in report.violations))
        return self


def validate(e: ProductExpansion) -> ValidationReport:
    violations = []
    for key, a in e.coeffs.items():
        if min(key) < 0:
            violations.append(Violation(key, RULE_NEGATIVE_INDEX))
        if not np.isfinite(a):
            violations.append(Violation(key, RULE_NONFINITE))
        elif a <= 0:
            violations.append(Violation(key, RULE_NONPOSITIVE))
        if e.q == 1 and key.m * key.n > 0:
            violations.append(Violation(key, RULE_Q1))
        if e.p == 1 and key.k * key.l > 0:
            violations.append(Violation(key, RULE_P1))
    return ValidationReport(tuple(violations))


def eval_f(e: ProductExpansion, xi, eta, *, tol: float = TOL_UNIT):
    """Evaluate the expansion at (xi, eta); arrays broadcast against each other."""
    e.checked()
    xi_arr, eta_arr = np.broadcast_arrays(np.asarray(xi, complex), np.asarray(eta, complex))
    total = np.zeros(xi_arr.shape, dtype=complex)
    first, second = {}, {}
    for (m, n, k, l), a in e.coeffs.items():
        if (m, n) not in first:
            first[m, n] = disc_poly(e.q, m, n, xi_arr, tol=tol)
        if (k, l) not in second:
            second[k, l] = disc_poly(e.p, k, l, eta_arr, tol=tol)
        total += a * first[m, n] * second[k, l]
    if total.ndim == 0:
        return complex(total)
    return total


def kernel_value(e: ProductExpansion, u, v, *, tol: float = TOL_UNIT) -> complex:
    """K(u, v) = f(z . z', w . w') for product points u = (z, w), v = (z', w')."""
    from .geometry import check_product_point, inner

    check_product_point(u, e.q, e.p)
    check_product_point(v, e.q, e.p)
    return eval_f(e, inner(u.z, v.z), inner(u.w, v.w), tol=tol)


def index_shadow(e: ProductExpansion) -> frozenset:
    """Image of the support under (m, n, k, l) -> (m - n, k - l)."""
    return frozenset((key.m - key.n, key.k - key.l) for key in e.coeffs)


def circle_rearrange(coeffs: Mapping[int, float]) -> dict:
    """Rewrite sum_{m in Z} a_m xi^m on the circle with keys (m, n), m*n = 0."""
    out = {}
    for m, a in sorted(coeffs.items()):
        if a == 0:
            continue
        out[(m, 0) if m >= 0 else (0, -m)] = float(a)
    return out
