"""Random instance generators shared by the test modules."""
import math

import numpy as np

from discspd.geometry import ProductPoint, SpherePoint, sample_uniform
from discspd.lattice import CosetProduct, IndexSet2D
from discspd.polynomials import INF
from discspd.spectrum import ProductExpansion

SPHERES = (1, 2, 3, INF)
DIVISORS_12 = (1, 2, 3, 4, 6, 12)


def dim_for(q, inf_dim=3):
    return inf_dim if q == INF else int(q)


def random_expansion(rng, q=None, p=None, max_terms=30, max_index=6):
    if q is None:
        q = SPHERES[rng.integers(len(SPHERES))]
    if p is None:
        p = SPHERES[rng.integers(len(SPHERES))]
    coeffs = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        m, n, k, l = (int(v) for v in rng.integers(0, max_index + 1, size=4))
        if q == 1 and m * n > 0:
            n = 0
        if p == 1 and k * l > 0:
            l = 0
        coeffs[m, n, k, l] = float(rng.uniform(0.05, 2.0))
    return ProductExpansion(q, p, coeffs)


def random_points(rng, q, p, count, inf_dim=3):
    dz, dw = dim_for(q, inf_dim), dim_for(p, inf_dim)
    return [ProductPoint(sample_uniform(dz, rng), sample_uniform(dw, rng)) for _ in range(count)]


def random_disc(rng, size):
    r = np.sqrt(rng.uniform(0.0, 1.0, size))
    return r * np.exp(1j * rng.uniform(0.0, 2 * math.pi, size))


def random_circle(rng, size):
    return np.exp(1j * rng.uniform(0.0, 2 * math.pi, size))


def _split(rng, product):
    """Split one coset product into a partition along one coordinate."""
    N, x, M, y = product.as_tuple()
    factor = int(rng.choice([2, 3]))
    if rng.random() < 0.5 and N * factor in DIVISORS_12:
        return [CosetProduct.of(N * factor, x + N * j, M, y) for j in range(factor)]
    if M * factor in DIVISORS_12:
        return [CosetProduct.of(N, x, M * factor, y + M * j) for j in range(factor)]
    return [product]


def random_index_set(rng, max_products=6, max_points=10, point_range=8):
    """Coset unions with moduli dividing 12, about half of them covering the plane."""
    pieces = [CosetProduct.of(1, 0, 1, 0)]
    for _ in range(int(rng.integers(0, 4))):
        i = int(rng.integers(len(pieces)))
        new = _split(rng, pieces[i])
        if len(pieces) - 1 + len(new) > max_products:
            break
        pieces[i : i + 1] = new
    if rng.random() < 0.5:
        pieces.pop(int(rng.integers(len(pieces))))
    while len(pieces) < max_products and rng.random() < 0.3:
        N, M = (int(v) for v in rng.choice(DIVISORS_12, size=2))
        pieces.append(CosetProduct.of(N, int(rng.integers(N)), M, int(rng.integers(M))))
    npts = int(rng.integers(0, max_points + 1))
    points = {tuple(int(v) for v in rng.integers(-point_range, point_range + 1, size=2)) for _ in range(npts)}
    return IndexSet2D(tuple(pieces), frozenset(points))


def lcm_of(s):
    L = 1
    for c in s.cosets:
        L = math.lcm(L, c.N, c.M)
    return L


def planted_rotation_set(rng, q_dim, p_dim, n_base=3, n_extra=4):
    """Distinct product points, several of them phase rotations of others."""
    zs = [sample_uniform(q_dim, rng) for _ in range(n_base)]
    ws = [sample_uniform(p_dim, rng) for _ in range(n_base)]
    points = [ProductPoint(z, w) for z, w in zip(zs, ws)]
    for _ in range(n_extra):
        i, j = (int(v) for v in rng.integers(n_base, size=2))
        theta, delta = (float(v) for v in rng.uniform(0, 2 * math.pi, size=2))
        z = zs[i].rotate(theta) if rng.random() < 0.7 else zs[i]
        w = ws[j].rotate(delta) if rng.random() < 0.7 else ws[j]
        candidate = ProductPoint(z, w)
        if not any(np.allclose(candidate.z.coords, u.z.coords) and np.allclose(candidate.w.coords, u.w.coords) for u in points):
            points.append(candidate)
    return points


def random_unitary(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def spread_points(rng, dim, count, max_modulus=0.5, tries=10000):
    """Points on the sphere of C^dim with pairwise |inner| <= max_modulus.

    In C^2 three such points (modulus 1/2) exist only as a rotated copy of the
    equiangular triple (1, e^{2 pi i j/3}) / sqrt(2), which is used directly.
    """
    if dim == 2 and count == 3 and max_modulus >= 0.5:
        U = random_unitary(rng, 2)
        return [SpherePoint(U @ np.array([1, np.exp(2j * np.pi * j / 3)]) / math.sqrt(2)) for j in range(3)]
    chosen = []
    for _ in range(tries):
        z = sample_uniform(dim, rng)
        if all(abs(np.vdot(y.coords, z.coords)) <= max_modulus for y in chosen):
            chosen.append(z)
            if len(chosen) == count:
                return chosen
    raise RuntimeError("could not place points")


def as_sphere(coords):
    return SpherePoint(np.asarray(coords, dtype=complex) / np.linalg.norm(coords))
