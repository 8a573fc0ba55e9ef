import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discspd.errors import DomainError, ValidationError
from discspd.geometry import ProductPoint, SpherePoint
from discspd.lattice import IndexSet2D, decide_spd_condition, intersects
from discspd.polynomials import INF, disc_poly
from discspd.spectrum import (
    ProductExpansion,
    circle_rearrange,
    eval_f,
    index_shadow,
    kernel_value,
    validate,
)

from helpers import SPHERES, random_disc, random_expansion, random_points


class TestValidate:
    def test_ok(self):
        assert validate(ProductExpansion(3, 2, {(1, 0, 2, 2): 0.5})).ok

    def test_circle_constraint_first(self):
        report = validate(ProductExpansion(1, 3, {(1, 1, 0, 0): 1.0}))
        assert not report.ok
        assert [v.rule for v in report.violations] == ["m*n > 0 with q = 1"]
        assert report.violations[0].key == (1, 1, 0, 0)

    def test_circle_constraint_second(self):
        report = validate(ProductExpansion(2, 1, {(0, 0, 2, 3): 1.0, (1, 1, 0, 2): 1.0}))
        assert [(tuple(v.key), v.rule) for v in report.violations] == [((0, 0, 2, 3), "k*l > 0 with p = 1")]

    def test_negative_coefficient(self):
        report = validate(ProductExpansion(2, 2, {(0, 0, 0, 0): -1.0}))
        assert [v.rule for v in report.violations] == ["nonpositive coefficient"]

    def test_several_rules_reported(self):
        report = validate(ProductExpansion(1, 1, {(1, 1, 0, 0): float("nan"), (0, -1, 0, 0): 1.0}))
        rules = {v.rule for v in report.violations}
        assert rules == {"non-finite coefficient", "m*n > 0 with q = 1", "negative index"}

    def test_checked_raises(self):
        with pytest.raises(ValidationError, match="q = 1"):
            ProductExpansion(1, 2, {(2, 3, 0, 0): 1.0}).checked()

    def test_zero_coefficients_dropped(self):
        e = ProductExpansion(2, 2, {(1, 0, 0, 0): 0.0, (0, 0, 0, 0): 1.0})
        assert list(e.coeffs) == [(0, 0, 0, 0)]

    def test_total(self):
        assert ProductExpansion(2, 2, {(1, 0, 0, 0): 0.25, (0, 0, 3, 1): 0.5}).total == 0.75

    def test_immutable(self):
        e = ProductExpansion(2, 2, {(0, 0, 0, 0): 1.0})
        with pytest.raises(Exception):
            e.q = 3


class TestEval:
    def test_constant(self):
        e = ProductExpansion(2, 5, {(0, 0, 0, 0): 1.0})
        assert eval_f(e, 0.3 - 0.2j, 0.1j) == 1.0

    def test_single_term(self):
        e = ProductExpansion(3, 3, {(1, 0, 0, 0): 2.0})
        assert eval_f(e, 0.5j, 0.9) == pytest.approx(1j, abs=1e-15)

    def test_monomials(self):
        e = ProductExpansion(INF, INF, {(1, 0, 0, 1): 1.0})
        assert eval_f(e, 0.5, 0.5j) == pytest.approx(-0.25j, abs=1e-15)

    def test_matches_term_sum(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            e = random_expansion(rng)
            xi = random_disc(rng, 1)[0] if e.q != 1 else np.exp(1j * rng.uniform(0, 6))
            eta = random_disc(rng, 1)[0] if e.p != 1 else np.exp(1j * rng.uniform(0, 6))
            direct = sum(a * disc_poly(e.q, m, n, xi) * disc_poly(e.p, k, l, eta) for (m, n, k, l), a in e.coeffs.items())
            assert eval_f(e, xi, eta) == pytest.approx(direct, abs=1e-12)

    def test_broadcast(self):
        e = ProductExpansion(2, 3, {(1, 2, 0, 1): 1.0, (0, 0, 0, 0): 0.5})
        xi = np.array([0.1, 0.2, 0.3])
        out = eval_f(e, xi, 0.5)
        assert out.shape == (3,)
        assert out[2] == pytest.approx(eval_f(e, 0.3, 0.5))

    def test_domain_error(self):
        e = ProductExpansion(1, 2, {(1, 0, 0, 0): 1.0})
        with pytest.raises(DomainError):
            eval_f(e, 0.5, 0.0)

    def test_bound_by_total(self):
        rng = np.random.default_rng(12)
        for _ in range(30):
            e = random_expansion(rng, q=int(rng.integers(2, 5)), p=INF)
            xi, eta = random_disc(rng, 50), random_disc(rng, 50)
            assert np.all(np.abs(eval_f(e, xi, eta)) <= e.total * (1 + 1e-12))


class TestKernel:
    def test_constant(self):
        rng = np.random.default_rng(0)
        e = ProductExpansion(2, 2, {(0, 0, 0, 0): 1.0})
        u, v = random_points(rng, 2, 2, 2)
        assert kernel_value(e, u, v) == pytest.approx(1.0)

    def test_diagonal_is_total(self):
        rng = np.random.default_rng(1)
        e = random_expansion(rng, q=3, p=INF)
        (u,) = random_points(rng, 3, INF, 1)
        assert kernel_value(e, u, u) == pytest.approx(e.total, rel=1e-12)

    def test_orthogonal(self):
        e = ProductExpansion(2, 2, {(1, 0, 0, 0): 1.0})
        w = SpherePoint([0.6, 0.8j])
        u = ProductPoint(SpherePoint.basis(2, 0), w)
        v = ProductPoint(SpherePoint.basis(2, 1), w)
        assert kernel_value(e, u, v) == 0

    @pytest.mark.parametrize("seed", range(10))
    def test_hermitian(self, seed):
        rng = np.random.default_rng(seed)
        e = random_expansion(rng)
        u, v = random_points(rng, e.q, e.p, 2)
        assert abs(kernel_value(e, u, v) - np.conj(kernel_value(e, v, u))) <= 1e-12


class TestShadow:
    def test_projection(self):
        assert index_shadow(ProductExpansion(2, 2, {(2, 0, 1, 3): 1.0})) == {(2, -2)}

    def test_collision(self):
        e = ProductExpansion(2, 2, {(1, 0, 0, 0): 1.0, (2, 1, 1, 1): 1.0})
        assert index_shadow(e) == {(1, 0)}

    def test_empty(self):
        assert index_shadow(ProductExpansion(2, 2, {})) == frozenset()

    @pytest.mark.parametrize("seed", range(10))
    def test_finite_shadow_never_satisfies(self, seed):
        e = random_expansion(np.random.default_rng(seed))
        s = IndexSet2D(points=index_shadow(e))
        verdict = decide_spd_condition(s)
        assert not verdict.holds
        assert not intersects(s, verdict.counterexample)


class TestCircleRearrange:
    @pytest.mark.parametrize(
        "given,expected",
        [({3: 0.5}, {(3, 0): 0.5}), ({-2: 1.0}, {(0, 2): 1.0}), ({0: 2.0}, {(0, 0): 2.0})],
    )
    def test_examples(self, given, expected):
        assert circle_rearrange(given) == expected

    def test_circle_expansion_matches_laurent_series(self):
        coeffs = {-3: 0.5, 0: 1.0, 2: 0.25}
        rearranged = circle_rearrange(coeffs)
        e = ProductExpansion(1, 2, {(m, n, 0, 0): a for (m, n), a in rearranged.items()})
        assert validate(e).ok
        phi = 1.3
        expected = sum(a * np.exp(1j * m * phi) for m, a in coeffs.items())
        assert eval_f(e, np.exp(1j * phi), 0.2) == pytest.approx(expected, abs=1e-14)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(SPHERES), st.sampled_from(SPHERES))
def test_hermitian_kernel_property(seed, q, p):
    rng = np.random.default_rng(seed)
    e = random_expansion(rng, q=q, p=p, max_terms=10)
    u, v = random_points(rng, q, p, 2)
    assert abs(kernel_value(e, u, v) - np.conj(kernel_value(e, v, u))) <= 1e-12 * max(1.0, e.total)
    assert abs(kernel_value(e, u, v)) <= e.total * (1 + 1e-12)
    assert math.isclose(kernel_value(e, u, u).real, e.total, rel_tol=1e-12)
