"""Command-line front end.

Subcommands: ``compute`` (invariants with witnesses and certificates),
``build`` (join and corona products written as edge-list files with a
layout sidecar), and ``verify`` (the claim-validation harness).

Exit codes: 0 success, 1 usage or parse error, 2 the requested invariant
does not exist, 3 at least one claim failed validation.

Graph sources: either an edge-list file, or a family spec in the
mini-grammar "name:params", e.g. path:4, cycle:5, complete:3, star:4,
complete_bipartite:2:3.  For ``build``, prefix a family spec with
"family:"; anything else is read as a file path.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .domination import SolverResult, gamma
from .graph import Graph, make_family, parse_edge_list, format_edge_list, vertex_list
from .harness import CLAIM_IDS, BudgetConfig, run_all
from .movable import ReplacementMode, gamma_m1, gamma_m2
from .products import corona, join

SCHEMA = "movdom/1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_EXISTS = 2
EXIT_CLAIM_FAILURE = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, which collides with the
    # invariant-does-not-exist code; remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_family_spec(spec: str) -> Graph:
    """Parse "name:params" into a family graph."""
    parts = spec.split(":")
    name, raw_params = parts[0], parts[1:]
    if not raw_params:
        raise ValueError(f"family spec {spec!r} is missing parameters")
    try:
        params = [int(p) for p in raw_params]
    except ValueError:
        raise ValueError(f"family spec {spec!r} has non-integer parameters") from None
    return make_family(name, *params)


def _read_graph_file(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def _load_source(spec: str) -> Graph:
    if spec.startswith("family:"):
        return parse_family_spec(spec[len("family:") :])
    return _read_graph_file(spec)


def _json_out(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _cmd_compute(args) -> int:
    try:
        g = parse_family_spec(args.family) if args.family else _read_graph_file(args.input)
        mode = ReplacementMode(args.mode)
        if args.which == "gamma":
            result = gamma(g)
        elif args.which == "gamma-m1":
            result = gamma_m1(g)
        else:
            result = gamma_m2(g, mode)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    payload: dict = {
        "schema": SCHEMA,
        "invariant": args.which,
        "value": result.value if result.exists else "none",
        "witness": vertex_list(result.witness) if result.exists else None,
    }
    if args.which == "gamma-m2":
        payload["mode"] = mode.value
    if result.certificate is not None:
        payload["certificate"] = result.certificate.to_json_dict()

    if args.json:
        _json_out(payload)
    else:
        _print_human_result(args.which, mode, result)
    return EXIT_OK if result.exists else EXIT_NOT_EXISTS


def _print_human_result(which: str, mode: ReplacementMode, result: SolverResult) -> None:
    header = which if which != "gamma-m2" else f"{which} mode={mode.value}"
    print(header)
    if not result.exists:
        print("value: none")
        return
    print(f"value: {result.value}")
    print("witness:", " ".join(str(v) for v in vertex_list(result.witness)))
    if result.certificate is not None:
        print("certificate:")
        for move in result.certificate.to_json_dict()["moves"]:
            where = (
                f"vertex {move['vertex']}"
                if "vertex" in move
                else "pair " + ",".join(str(v) for v in move["pair"])
            )
            if move["action"] == "drop":
                print(f"  {where}: drop")
            else:
                rep = move["replacement"]
                rep_text = str(rep) if isinstance(rep, int) else ",".join(str(v) for v in rep)
                print(f"  {where}: swap {rep_text}")


def _cmd_build(args) -> int:
    try:
        left = _load_source(args.left)
        right = _load_source(args.right)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.product == "join":
        product, layout = join(left, right)
        layout_payload = {
            "schema": SCHEMA,
            "product": "join",
            "n": product.n,
            "g_range": list(layout.g_range),
            "h_range": list(layout.h_range),
        }
    else:
        product, layout = corona(left, right)
        layout_payload = {
            "schema": SCHEMA,
            "product": "corona",
            "n": product.n,
            "centers": list(layout.centers),
            "copies": [list(c) for c in layout.copies],
        }

    out_path = Path(args.output)
    sidecar_path = Path(str(out_path) + ".layout.json")
    try:
        out_path.write_text(format_edge_list(product), encoding="ascii")
        sidecar_path.write_text(
            json.dumps(layout_payload, indent=2, sort_keys=True) + "\n", encoding="ascii"
        )
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    summary = {
        "schema": SCHEMA,
        "product": args.product,
        "n": product.n,
        "edge_count": product.edge_count,
        "output": str(out_path),
        "layout": str(sidecar_path),
    }
    if args.json:
        _json_out(summary)
    else:
        print(
            f"{args.product}: {product.n} vertices, {product.edge_count} edges "
            f"-> {out_path} (layout: {sidecar_path})"
        )
    return EXIT_OK


def _cmd_verify(args) -> int:
    samples = args.samples
    budget = BudgetConfig(
        max_order=args.max_order,
        samples=100 if samples is None else samples,
        movable_samples=50 if samples is None else samples,
        seed=args.seed,
    )
    claims = None if not args.claim else args.claim
    try:
        reports = run_all(budget, claims)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.json:
        _json_out(
            {
                "schema": SCHEMA,
                "seed": budget.seed,
                "reports": [r.to_json_dict() for r in reports],
            }
        )
    else:
        for r in reports:
            flag = "PASS" if r.passed else "FAIL"
            vacuous = ", vacuous" if r.instances == 0 else ""
            print(f"{r.claim}: {flag} ({r.instances} instances{vacuous})")
            if r.counterexample is not None:
                print(f"  counterexample: {json.dumps(r.counterexample, sort_keys=True)}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CLAIM_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="movdom", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute an invariant with witness")
    p_compute.add_argument("which", choices=["gamma", "gamma-m1", "gamma-m2"])
    source = p_compute.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", help="family spec, e.g. path:4")
    source.add_argument("--input", help="edge-list file to read")
    p_compute.add_argument("--mode", choices=["literal", "distinct"], default="literal")
    p_compute.add_argument("--json", action="store_true")
    p_compute.set_defaults(func=_cmd_compute)

    p_build = sub.add_parser("build", help="build a graph product")
    p_build.add_argument("product", choices=["join", "corona"])
    p_build.add_argument("--left", required=True, help="family:SPEC or edge-list path")
    p_build.add_argument("--right", required=True, help="family:SPEC or edge-list path")
    p_build.add_argument("--output", required=True, help="edge-list file to write")
    p_build.add_argument("--json", action="store_true")
    p_build.set_defaults(func=_cmd_build)

    p_verify = sub.add_parser("verify", help="validate the claims on instance pools")
    p_verify.add_argument("--all", action="store_true", help="run every claim (default)")
    p_verify.add_argument(
        "--claim",
        action="append",
        choices=list(CLAIM_IDS),
        help="run one claim (repeatable)",
    )
    p_verify.add_argument("--max-order", type=int, default=5, dest="max_order")
    p_verify.add_argument("--samples", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
