"""JSON documents read and written by the command line.

expansion   {"q": 3 | "inf", "p": ..., "coefficients": [{"m", "n", "k", "l", "a"}, ...]}
index set   {"cosets": [{"N", "x", "M", "y"}, ...], "points": [[a, b], ...]}
points      {"q", "p", "points": [{"z": [[re, im], ...], "w": [[re, im], ...]}, ...]}
torus/cos2d {"kind": "torus" | "cos2d", "coefficients": [{"m", "k", "a"}, ...]}
circle/cos1d {"kind": "circle" | "cos1d", "coefficients": [{"m", "a"}, ...]}

Complex numbers are [re, im] pairs.  Parse failures raise ValidationError.
"""
from __future__ import annotations

import functools
import json
from pathlib import Path

import numpy as np

from .errors import DiscSpdError, ValidationError
from .geometry import ProductPoint, SpherePoint
from .lattice import CosetProduct, IndexSet2D
from .polynomials import format_sphere_param, sphere_param
from .spectrum import ProductExpansion


def load_json(path) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    if not isinstance(doc, dict):
        raise ValidationError(f"{path}: top-level value must be an object")
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n"


def _wrap(fn):
    @functools.wraps(fn)
    def parse(doc, *args):
        try:
            return fn(doc, *args)
        except DiscSpdError:
            raise
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise ValidationError(f"malformed document: {exc!r}") from None

    return parse


def _int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"expected an integer, got {value!r}")
    return value


def _num(value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"expected a number, got {value!r}")
    return float(value)


def complex_pair(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def parse_complex_pair(pair) -> complex:
    re, im = pair
    return complex(_num(re), _num(im))


@_wrap
def parse_expansion(doc) -> ProductExpansion:
    coeffs = {}
    for entry in doc["coefficients"]:
        key = tuple(_int(entry[name]) for name in ("m", "n", "k", "l"))
        if key in coeffs:
            raise ValidationError(f"duplicate coefficient key {key}")
        coeffs[key] = _num(entry["a"])
    return ProductExpansion(doc["q"], doc["p"], coeffs)


def expansion_doc(e: ProductExpansion) -> dict:
    return {
        "q": format_sphere_param(e.q),
        "p": format_sphere_param(e.p),
        "coefficients": [
            {"m": m, "n": n, "k": k, "l": l, "a": a} for (m, n, k, l), a in e.coeffs.items()
        ],
    }


@_wrap
def parse_index_set(doc) -> IndexSet2D:
    cosets = []
    for entry in doc.get("cosets", []):
        cosets.append(
            CosetProduct.of(_int(entry["N"]), _int(entry["x"]), _int(entry["M"]), _int(entry["y"]))
        )
    points = []
    for a, b in doc.get("points", []):
        points.append((_int(a), _int(b)))
    return IndexSet2D(tuple(cosets), frozenset(points))


def progression_doc(c: CosetProduct | None):
    if c is None:
        return None
    return {"N": c.N, "x": c.x, "M": c.M, "y": c.y}


def _sphere_point(coords) -> SpherePoint:
    return SpherePoint([parse_complex_pair(pair) for pair in coords])


@_wrap
def parse_points(doc):
    """Returns (q, p, list of ProductPoint)."""
    q, p = sphere_param(doc["q"]), sphere_param(doc["p"])
    points = [ProductPoint(_sphere_point(u["z"]), _sphere_point(u["w"])) for u in doc["points"]]
    return q, p, points


def points_doc(q, p, points) -> dict:
    return {
        "q": format_sphere_param(q),
        "p": format_sphere_param(p),
        "points": [
            {
                "z": [complex_pair(v) for v in u.z.coords],
                "w": [complex_pair(v) for v in u.w.coords],
            }
            for u in points
        ],
    }


@_wrap
def parse_coefficients(doc, kind: str) -> dict:
    """Coefficient map of a bridge document; ``kind`` selects 1D or 2D keys."""
    declared = doc.get("kind", kind)
    if declared != kind:
        raise ValidationError(f"expected a {kind!r} document, got {declared!r}")
    two_d = kind in ("torus", "cos2d")
    out = {}
    for entry in doc["coefficients"]:
        key = (_int(entry["m"]), _int(entry["k"])) if two_d else _int(entry["m"])
        if key in out:
            raise ValidationError(f"duplicate coefficient key {key}")
        out[key] = _num(entry["a"])
    return out


def coefficients_doc(coeffs: dict, kind: str) -> dict:
    if kind in ("torus", "cos2d"):
        entries = [{"m": m, "k": k, "a": a} for (m, k), a in sorted(coeffs.items())]
    else:
        entries = [{"m": m, "a": a} for m, a in sorted(coeffs.items())]
    return {"kind": kind, "coefficients": entries}


def write_matrix(path, a: np.ndarray) -> None:
    """Dense row-major text: a header "rows cols", then one row per line as re im pairs."""
    lines = [f"{a.shape[0]} {a.shape[1]}"]
    for row in a:
        lines.append(" ".join(f"{v.real:.17g} {v.imag:.17g}" for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_matrix(path) -> np.ndarray:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    rows, cols = (int(v) for v in lines[0].split())
    values = np.array([[float(v) for v in line.split()] for line in lines[1 : rows + 1]])
    return (values[:, 0::2] + 1j * values[:, 1::2]).reshape(rows, cols)
