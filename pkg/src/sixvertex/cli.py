"""Command-line surface: evaluation, classification, gadget checks,
interpolation, the ice experiment, and the acceptance selftest.

Exit codes: 0 success, 1 computational refusal (resource caps), 2 input
error. Exact scalar strings are always printed next to float approximations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .acceptance import LIEB, run_acceptance
from .classify import classify
from .config import load_config
from .contract import ContractionCapError, contract_eval, sequential_plan
from .evaluate import TooLargeError
from .gadgets import (
    GadgetError,
    chain_D,
    closed_form_D,
    hardness_determinant,
    mnm_product,
    one_zero_chain,
    two_zero_product,
)
from .grid import GridError, build_torus, grid_to_json, load_grid, save_grid
from .interpolate import (
    InterpolationError,
    InterpolationInstance,
    LatticeError,
    compute_lattice,
    gaussian_from_scalar,
    interpolation_solve,
)
from .scalar import (
    Scalar,
    ScalarParseError,
    approx_complex,
    format_scalar,
    parse_scalar,
)
from .signature import SixVertexParams, six_vertex_params
from .solvers import SolverError, solve

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _parse_params(values) -> SixVertexParams:
    if len(values) != 6:
        raise InputError("need exactly 6 scalars (a x b y c z)")
    try:
        return SixVertexParams(*(parse_scalar(v) for v in values))
    except ScalarParseError as exc:
        raise InputError(str(exc)) from exc


def _value_report(value: Scalar, precision: int) -> dict:
    approx = approx_complex(value, precision)
    return {
        "value": format_scalar(value),
        "approx": {"re": float(approx.real), "im": float(approx.imag)},
    }


def _emit(payload: dict, as_json: bool):
    if as_json:
        print(json.dumps(payload, indent=1))
        return
    for key, val in payload.items():
        print(f"{key}: {json.dumps(val) if isinstance(val, (dict, list)) else val}")


def cmd_eval(args, cfg) -> int:
    try:
        grid = load_grid(args.grid)
        grid.assert_valid()
    except (OSError, json.JSONDecodeError, GridError, ScalarParseError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        result = solve(
            grid,
            method=args.method,
            edge_cap=cfg.brute_force_edge_cap,
            rank_cap=cfg.contraction_rank_cap,
        )
    except (TooLargeError, ContractionCapError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except SolverError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    payload = _value_report(result.value, cfg.precision_bits)
    payload["class_used"] = result.class_used
    _emit(payload, args.json)
    return EXIT_OK


def cmd_classify(args, cfg) -> int:
    p = _parse_params(args.params)
    print(json.dumps(classify(p).to_json(), indent=1))
    return EXIT_OK


def cmd_ice(args, cfg) -> int:
    ice = SixVertexParams.of(1, 1, 1, 1, 1, 1)
    rows = []
    for n in range(2, args.n_max + 1, 2):
        torus = build_torus(n, ice)
        try:
            res = contract_eval(
                torus,
                plan=sequential_plan(torus),
                rank_cap=cfg.contraction_rank_cap,
            )
        except ContractionCapError as exc:
            print(f"refused: {exc}", file=sys.stderr)
            return EXIT_REFUSED
        z = res.value
        z_float = float(approx_complex(z).real)
        w = z_float ** (1.0 / (n * n))
        rows.append(
            {
                "n": n,
                "Z": format_scalar(z),
                "Z_float": z_float,
                "W": w,
                "reference": LIEB,
                "abs_error": abs(w - LIEB),
            }
        )
    if args.json:
        print(json.dumps({"rows": rows}, indent=1))
    else:
        for row in rows:
            print(
                f"n={row['n']}: Z={row['Z']}  W={row['W']:.7f}  "
                f"|W-(4/3)^1.5|={row['abs_error']:.7f}"
            )
    return EXIT_OK


def cmd_selftest(args, cfg) -> int:
    indices = None
    if args.criteria:
        indices = {int(tok) for tok in args.criteria.split(",")}
    results = run_acceptance(seed=cfg.deterministic_seed, indices=indices)
    all_ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        all_ok = all_ok and r.passed
        print(f"[{status}] criterion {r.index}: {r.name} ({r.seconds:.1f}s) {r.detail}")
    return EXIT_OK if all_ok else EXIT_REFUSED


def cmd_torus(args, cfg) -> int:
    p = _parse_params(args.params)
    try:
        grid = build_torus(args.n, p)
    except GridError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output:
        save_grid(grid, args.output)
        print(f"wrote {args.output} ({len(grid.vertices)} vertices, {len(grid.edges)} edges)")
    else:
        print(json.dumps(grid_to_json(grid), indent=1))
    return EXIT_OK


def cmd_gadget(args, cfg) -> int:
    kind = args.kind
    if kind == "det27":
        dom = ("0", "0+1i", "0-1i")
        rows = []
        for x in dom:
            for y in dom:
                for z in dom:
                    d = hardness_determinant(
                        parse_scalar(x), parse_scalar(y), parse_scalar(z)
                    )
                    rows.append({"triple": [x, y, z], "det": format_scalar(d)})
        ok = all(r["det"] != "0" for r in rows)
        _emit({"all_nonzero": ok, "rows": rows if args.json else len(rows)}, args.json)
        return EXIT_OK
    p = _parse_params(args.params)
    try:
        if kind == "chain":
            sig = chain_D(p, args.s)
            closed = closed_form_D(p.a, p.b, p.c, args.s)
            payload = {
                "s": args.s,
                "chain": [format_scalar(v) for v in six_vertex_params(sig)],
                "closed_form": [format_scalar(v) for v in six_vertex_params(closed)],
                "equal": sig == closed,
            }
        elif kind == "mnm":
            payload = {
                "result": [format_scalar(v) for v in mnm_product(p)],
            }
        elif kind == "one-zero":
            res = one_zero_chain(p)
            payload = {
                "normalized": [format_scalar(v) for v in res.normalized],
                "branch": res.branch,
                "steps": [
                    {"label": label, "params": [format_scalar(v) for v in q]}
                    for label, q in res.steps
                ],
            }
        else:  # two-zero
            payload = {
                "result": [format_scalar(v) for v in two_zero_product(p)],
            }
    except GadgetError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(payload, args.json)
    return EXIT_OK


def cmd_interpolate(args, cfg) -> int:
    try:
        alpha = gaussian_from_scalar(parse_scalar(args.alpha))
        beta = gaussian_from_scalar(parse_scalar(args.beta))
        phi = parse_scalar(args.phi)
        psi = parse_scalar(args.psi)
        with open(args.values) as fh:
            n_values = tuple(parse_scalar(v) for v in json.load(fh))
    except (OSError, json.JSONDecodeError, ScalarParseError, LatticeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        lattice = compute_lattice(alpha, beta)
        inst = InterpolationInstance(alpha, beta, args.m, n_values)
        value = interpolation_solve(inst, phi, psi)
    except (LatticeError, InterpolationError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    payload = _value_report(value, cfg.precision_bits)
    payload["lattice"] = {
        "rank": lattice.rank,
        "generator": list(lattice.generator) if lattice.generator else None,
    }
    _emit(payload, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sixvertex",
        description="Exact six-vertex / Holant toolkit",
    )
    parser.add_argument("--cap-edges", type=int, help="brute-force edge cap")
    parser.add_argument("--cap-rank", type=int, help="contraction rank cap")
    parser.add_argument("--precision", type=int, help="reporting precision bits")
    parser.add_argument("--seed", type=int, help="seed for randomized suites")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a grid file")
    p.add_argument("grid")
    p.add_argument(
        "--method",
        choices=("auto", "brute", "contract", "p", "a", "m"),
        default="auto",
    )
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("classify", help="classify six-vertex parameters")
    p.add_argument("params", nargs=6, metavar="SCALAR")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("ice", help="finite-size square-ice constants")
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(fn=cmd_ice)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--criteria", help="comma-separated subset, e.g. 1,8")
    p.set_defaults(fn=cmd_selftest)

    p = sub.add_parser("torus", help="emit an n x n torus grid file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--params", nargs=6, required=True, metavar="SCALAR")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_torus)

    p = sub.add_parser("gadget", help="gadget constructions and checks")
    p.add_argument("kind", choices=("chain", "mnm", "one-zero", "two-zero", "det27"))
    p.add_argument("--params", nargs=6, metavar="SCALAR")
    p.add_argument("--s", type=int, default=2, help="chain length")
    p.set_defaults(fn=cmd_gadget)

    p = sub.add_parser("interpolate", help="coset-grouped Vandermonde solve")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--values", required=True, help="JSON list of N_l scalars")
    p.set_defaults(fn=cmd_interpolate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gadget" and args.kind != "det27" and not args.params:
        parser.error("gadget kinds other than det27 require --params")
    try:
        cfg = load_config(
            {
                "brute_force_edge_cap": args.cap_edges,
                "contraction_rank_cap": args.cap_rank,
                "precision_bits": args.precision,
                "deterministic_seed": args.seed,
            }
        )
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"input error: bad config: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.fn(args, cfg)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
