"""Command-line front end.

Exit codes: 0 ok, 1 unverified witness or internal failure, 2 parse or
validation error, 3 domain error, 4 lcm capacity exceeded, 5 progression meets
the index shadow, 6 duplicate points, 7 coefficient symmetry violation.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import bridge, documents
from .errors import DiscSpdError, ValidationError
from .geometry import check_point_set, sample_product, sample_uniform, ProductPoint
from .gram import build_A, default_base, min_eigenvalue, spd_witness
from .lattice import CosetProduct, IndexSet2D, decide_spd_condition
from .polynomials import INF, format_sphere_param, sphere_param
from .spectrum import eval_f, index_shadow

TRANSLATIONS = {
    "cos-to-torus": ("cos2d", "torus", bridge.cos_to_torus, bridge.torus_to_cos),
    "torus-to-cos": ("torus", "cos2d", bridge.torus_to_cos, bridge.cos_to_torus),
    "cos-to-circle": ("cos1d", "circle", bridge.cos_to_circle, bridge.circle_to_cos),
    "circle-to-cos": ("circle", "cos1d", bridge.circle_to_cos, bridge.cos_to_circle),
}


def _digest(command: str, args: dict, files: list) -> str:
    h = hashlib.sha256()
    file_digests = [hashlib.sha256(Path(f).read_bytes()).hexdigest() for f in files]
    h.update(json.dumps({"command": command, "args": args, "files": file_digests}, sort_keys=True).encode())
    return h.hexdigest()


def _parse_complex(text: str) -> complex:
    try:
        if "," in text:
            re, im = text.split(",")
            return complex(float(re), float(im))
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _parse_progression(text: str) -> CosetProduct:
    try:
        N, x, M, y = (int(v) for v in text.split(","))
        return CosetProduct.of(N, x, M, y)
    except (ValueError, DiscSpdError):
        raise argparse.ArgumentTypeError(f"expected N,x,M,y with N, M >= 1, got {text!r}") from None


def _sphere(text: str):
    try:
        return sphere_param(text)
    except DiscSpdError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_eval(args):
    e = documents.parse_expansion(documents.load_json(args.expansion))
    value = complex(eval_f(e, args.xi, args.eta))
    text = f"{value.real!r} {value.imag!r}"
    result = {"value": documents.complex_pair(value), "text": text}
    digest_args = {"xi": documents.complex_pair(args.xi), "eta": documents.complex_pair(args.eta)}
    return result, digest_args, [args.expansion], text + "\n"


def cmd_check_spd(args):
    doc = documents.load_json(args.input)
    if "coefficients" in doc:
        e = documents.parse_expansion(doc).checked()
        s = IndexSet2D(points=index_shadow(e))
        source = "expansion"
    else:
        s = documents.parse_index_set(doc)
        source = "index_set"
    verdict = decide_spd_condition(s)
    result = {
        "source": source,
        "holds": verdict.holds,
        "counterexample": documents.progression_doc(verdict.counterexample),
    }
    return result, {}, [args.input], None


def cmd_witness(args):
    e = documents.parse_expansion(documents.load_json(args.expansion)).checked()
    files = [args.expansion]
    prog = args.progression
    if prog is None:
        verdict = decide_spd_condition(IndexSet2D(points=index_shadow(e)))
        prog = verdict.counterexample
    if args.base is not None:
        _, _, pts = documents.parse_points(documents.load_json(args.base))
        if not pts:
            raise ValidationError("base point file holds no points")
        base = pts[0]
        check_point_set([base], e.q, e.p)
        files.append(args.base)
    elif args.seed is not None:
        rng = np.random.default_rng(args.seed)
        dz = args.inf_dim if e.q == INF else e.q
        dw = args.inf_dim if e.p == INF else e.p
        base = ProductPoint(sample_uniform(dz, rng), sample_uniform(dw, rng))
    else:
        base = default_base(e.q, e.p, args.inf_dim)
    w = spd_witness(e, prog, base, tol_scale=args.tol_scale)
    result = {
        "progression": documents.progression_doc(w.progression),
        "points": documents.points_doc(e.q, e.p, w.points)["points"],
        "coeffs": [documents.complex_pair(v) for v in w.coeffs],
        "value": w.value,
        "tolerance": w.tolerance,
        "verified": w.verified,
        "min_eigenvalue": min_eigenvalue(w.gram),
        "trace": w.gram.trace,
    }
    digest_args = {
        "progression": documents.progression_doc(args.progression),
        "seed": args.seed,
        "inf_dim": args.inf_dim,
        "tol_scale": args.tol_scale,
    }
    return result, digest_args, files, None


def cmd_gram(args):
    e = documents.parse_expansion(documents.load_json(args.expansion)).checked()
    q, p, points = documents.parse_points(documents.load_json(args.points))
    if (q, p) != (e.q, e.p):
        raise ValidationError(
            f"points are on q={format_sphere_param(q)}, p={format_sphere_param(p)} "
            f"but the expansion has q={format_sphere_param(e.q)}, p={format_sphere_param(e.p)}"
        )
    A = build_A(e, points)
    result = {
        "size": A.size,
        "total": e.total,
        "trace": A.trace,
        "hermitian_residual": A.hermitian_residual,
        "min_eigenvalue": min_eigenvalue(A) if A.size else None,
    }
    if args.dump_matrix:
        documents.write_matrix(args.dump_matrix, A.entries)
    return result, {}, [args.expansion, args.points], None


def cmd_sample(args):
    rng = np.random.default_rng(args.seed)
    dz = args.inf_dim if args.q == INF else args.q
    dw = args.inf_dim if args.p == INF else args.p
    points = [sample_product(dz, dw, rng) for _ in range(args.count)]
    doc = documents.points_doc(args.q, args.p, points)
    text = documents.dumps(doc)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    result = {"count": args.count, "dims": [dz, dw]}
    digest_args = {
        "q": format_sphere_param(args.q),
        "p": format_sphere_param(args.p),
        "count": args.count,
        "seed": args.seed,
        "inf_dim": args.inf_dim,
    }
    return result, digest_args, [], None if args.out else text


def cmd_translate(args):
    src_kind, dst_kind, forward, backward = TRANSLATIONS[args.direction]
    coeffs = documents.parse_coefficients(documents.load_json(args.input), src_kind)
    out = forward(coeffs)
    result = {"direction": args.direction, "output": documents.coefficients_doc(out, dst_kind)}
    if args.round_trip:
        back = backward(out)
        same = back == {k: v for k, v in coeffs.items() if v != 0}
        result["round_trip"] = same
        if not same:
            raise DiscSpdError("round trip did not reproduce the input")
    return result, {"direction": args.direction, "round_trip": args.round_trip}, [args.input], None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", metavar="PATH", help="also write the run report to PATH")
    common.add_argument("--no-timing", action="store_true", help="report timing_ms as 0 (byte-stable output)")
    common.add_argument("--tol-scale", type=float, default=1.0, help="multiply verification tolerances")

    parser = argparse.ArgumentParser(prog="discspd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expansion at (xi, eta)")
    p.add_argument("expansion")
    p.add_argument("--xi", type=_parse_complex, required=True)
    p.add_argument("--eta", type=_parse_complex, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check-spd", parents=[common], help="decide the progression criterion")
    p.add_argument("input", help="index set or expansion document")
    p.set_defaults(func=cmd_check_spd)

    p = sub.add_parser("witness", parents=[common], help="build and verify a non-SPD witness")
    p.add_argument("expansion")
    p.add_argument("--progression", type=_parse_progression, metavar="N,x,M,y")
    p.add_argument("--base", metavar="POINTS", help="points document; its first point is the base")
    p.add_argument("--seed", type=int, help="sample a random base point with this seed")
    p.add_argument("--inf-dim", type=int, default=2, help="coordinates used for q or p = inf")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("gram", parents=[common], help="Gram matrix diagnostics")
    p.add_argument("expansion")
    p.add_argument("points")
    p.add_argument("--dump-matrix", metavar="PATH")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("sample", parents=[common], help="sample product points uniformly")
    p.add_argument("--q", type=_sphere, required=True)
    p.add_argument("--p", type=_sphere, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inf-dim", type=int, default=2)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("translate", parents=[common], help="circle/torus coefficient bridges")
    p.add_argument("direction", choices=sorted(TRANSLATIONS))
    p.add_argument("input")
    p.add_argument("--round-trip", action="store_true")
    p.set_defaults(func=cmd_translate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        result, digest_args, files, stdout_text = args.func(args)
    except DiscSpdError as exc:
        print(f"discspd {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    elapsed = 0.0 if args.no_timing else (time.perf_counter() - start) * 1000.0
    report = {
        "command": args.command,
        "inputs_digest": _digest(args.command, digest_args, files),
        "result": result,
        "timing_ms": elapsed,
    }
    text = documents.dumps(report)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    sys.stdout.write(text if stdout_text is None else stdout_text)
    if args.command == "witness" and not result["verified"]:
        print("discspd witness: quadratic form exceeds tolerance", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
