"""Command-line interface to the counting pipelines and the ring calculator.

Exit codes: 0 success, 2 usage error, 3 mathematical precondition failure,
4 internal assertion failure.  Output is plain text by default; pass
`--format structured` for a canonical JSON object whose counts are decimal
strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import chern
from .chern import dual_universal_vector, segre_from_chern, sym_power, tensor_line, whitney_quotient
from .errors import CurveCountError, InternalCheckError
from .grassmannian import GrassmannianRing, integrate, multiply, pieri
from .pipelines import (
    CountReport,
    NormalBundleType,
    count_conics_quintic,
    count_lines_complete_intersection,
    count_lines_hypersurface,
    degeneration_split_report,
    equivalence_lines_on_factor,
    naive_dimension_count,
    normal_bundle_h0,
    tally_checks,
)

CACHE_DIR_ENV = "CURVECOUNT_CACHE_DIR"


@dataclass
class CliConfig:
    output_format: str = "plain"
    trace: bool = False
    cache_dir: str | None = None


def _parse_grassmannian(text: str) -> GrassmannianRing:
    try:
        r, n = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'r,N', got {text!r}")
    return GrassmannianRing(r, n)


def _parse_partition(text: str) -> tuple[int, ...]:
    if text.strip() in ("", "0"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parse_degrees(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _emit_report(report: CountReport, config: CliConfig) -> None:
    if config.output_format == "structured":
        print(_dump(report.to_payload(include_trace=config.trace)))
        return
    print(report.count)
    for name, ok in report.consistency:
        print(f"check {name}: {'pass' if ok else 'FAIL'}")
    if config.trace:
        for label, value in report.trace:
            print(f"trace {label}: {value}")


def _emit_record(pipeline: str, inputs: dict, record: dict, headline: str, config: CliConfig) -> None:
    if config.output_format == "structured":
        payload = {
            "pipeline": pipeline,
            "inputs": inputs,
            "count": str(record[headline]),
            "record": {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v) for k, v in record.items()},
            "consistency": [],
        }
        print(_dump(payload))
        return
    print(" ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in record.items()))


def _emit_class(pipeline: str, inputs: dict, payload_value, config: CliConfig) -> None:
    if config.output_format == "structured":
        print(_dump({"pipeline": pipeline, "inputs": inputs, "result": payload_value}))
        return
    if isinstance(payload_value, list) and not payload_value:
        print("0")
        return
    print(json.dumps(payload_value, separators=(",", ":")))


def _cmd_lines(args, config):
    _emit_report(count_lines_hypersurface(args.ambient, args.degree), config)


def _cmd_lines_ci(args, config):
    _emit_report(count_lines_complete_intersection(args.ambient, args.degrees), config)


def _cmd_conics_quintic(args, config):
    _emit_report(count_conics_quintic(), config)


def _cmd_equivalence(args, config):
    _emit_report(equivalence_lines_on_factor(args.total, args.factor, args.ambient), config)


def _cmd_split_report(args, config):
    _emit_report(degeneration_split_report(args.degree, args.ambient), config)


def _cmd_dim_count(args, config):
    rec = naive_dimension_count(args.ambient, args.hypersurface, args.curve_degree)
    _emit_record(
        "dim-count",
        {"ambient": args.ambient, "hypersurface": args.hypersurface, "curve_degree": args.curve_degree},
        {
            "parameters": rec.parameters,
            "conditions": rec.conditions,
            "reparametrizations": rec.reparametrizations,
            "expected_dim": rec.expected_dim,
        },
        "expected_dim",
        config,
    )


def _cmd_normal_bundle(args, config):
    rec = normal_bundle_h0(NormalBundleType(args.a, args.b))
    _emit_record(
        "normal-bundle",
        {"a": args.a, "b": args.b},
        {"h0": rec.h0, "rigid": rec.rigid},
        "h0",
        config,
    )


def _cmd_tally_checks(args, config):
    _emit_report(tally_checks(), config)


def _cmd_schubert_mult(args, config):
    ring = args.grassmannian
    result = multiply(ring.sigma(args.a), ring.sigma(args.b))
    _emit_class(
        "schubert-mult",
        {"grassmannian": f"{ring.r},{ring.N}", "a": list(args.a), "b": list(args.b)},
        result.to_payload(),
        config,
    )


def _cmd_schubert_pieri(args, config):
    ring = args.grassmannian
    result = pieri(ring.sigma(args.a), args.k)
    _emit_class(
        "schubert-pieri",
        {"grassmannian": f"{ring.r},{ring.N}", "a": list(args.a), "k": args.k},
        result.to_payload(),
        config,
    )


def _cmd_schubert_integrate(args, config):
    ring = args.grassmannian
    value = integrate(ring.sigma(args.a) ** args.power)
    _emit_class(
        "schubert-integrate",
        {"grassmannian": f"{ring.r},{ring.N}", "a": list(args.a), "power": args.power},
        str(value),
        config,
    )


def _cmd_chern_sym(args, config):
    ring = args.grassmannian
    vec = sym_power(dual_universal_vector(ring), args.degree)
    _emit_class(
        "chern-sym",
        {"grassmannian": f"{ring.r},{ring.N}", "degree": args.degree},
        vec.to_payload(),
        config,
    )


def _cmd_chern_dual(args, config):
    ring = args.grassmannian
    vec = chern.dual(sym_power(dual_universal_vector(ring), args.degree))
    _emit_class(
        "chern-dual",
        {"grassmannian": f"{ring.r},{ring.N}", "degree": args.degree},
        vec.to_payload(),
        config,
    )


def _cmd_chern_twist(args, config):
    ring = args.grassmannian
    t = ring.sigma((1,)) * args.by if args.by else ring.zero()
    vec = tensor_line(sym_power(dual_universal_vector(ring), args.degree), t)
    _emit_class(
        "chern-twist",
        {"grassmannian": f"{ring.r},{ring.N}", "degree": args.degree, "by": args.by},
        vec.to_payload(),
        config,
    )


def _cmd_chern_quotient(args, config):
    ring = args.grassmannian
    cu = dual_universal_vector(ring)
    vec = whitney_quotient(sym_power(cu, args.num), sym_power(cu, args.den))
    _emit_class(
        "chern-quotient",
        {"grassmannian": f"{ring.r},{ring.N}", "num": args.num, "den": args.den},
        vec.to_payload(),
        config,
    )


def _cmd_chern_segre(args, config):
    ring = args.grassmannian
    trunc = args.trunc if args.trunc is not None else ring.dim
    classes = segre_from_chern(sym_power(dual_universal_vector(ring), args.degree), trunc)
    _emit_class(
        "chern-segre",
        {"grassmannian": f"{ring.r},{ring.N}", "degree": args.degree, "trunc": trunc},
        [c.to_payload() for c in classes],
        config,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvecount",
        description="Exact curve counts on Calabi-Yau threefolds via Schubert calculus.",
    )
    parser.add_argument(
        "--format", dest="output_format", choices=("plain", "structured"), default="plain",
        help="output format (default: plain)",
    )
    parser.add_argument("--trace", action="store_true", help="include intermediate classes")
    parser.add_argument(
        "--cache-dir", default=None,
        help=f"directory for the universal-polynomial cache (or ${CACHE_DIR_ENV})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lines", help="count lines on a hypersurface")
    p.add_argument("--ambient", type=int, required=True, help="projective ambient dimension n")
    p.add_argument("--degree", type=int, required=True, help="hypersurface degree")
    p.set_defaults(func=_cmd_lines)

    p = sub.add_parser("lines-ci", help="count lines on a complete intersection")
    p.add_argument("--ambient", type=int, required=True)
    p.add_argument("--degrees", type=_parse_degrees, required=True, help="e.g. 2,4")
    p.set_defaults(func=_cmd_lines_ci)

    p = sub.add_parser("conics-quintic", help="count conics on the quintic threefold")
    p.set_defaults(func=_cmd_conics_quintic)

    p = sub.add_parser("equivalence", help="lines absorbed by a factor of a reducible hypersurface")
    p.add_argument("--total", type=int, required=True, help="total hypersurface degree D")
    p.add_argument("--factor", type=int, required=True, help="factor degree e")
    p.add_argument("--ambient", type=int, required=True)
    p.set_defaults(func=_cmd_equivalence)

    p = sub.add_parser("split-report", help="equivalences of every split, checked against the total")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ambient", type=int, required=True)
    p.set_defaults(func=_cmd_split_report)

    p = sub.add_parser("dim-count", help="naive parameter count for curves on a hypersurface")
    p.add_argument("--ambient", type=int, required=True)
    p.add_argument("--hypersurface", type=int, required=True)
    p.add_argument("--curve-degree", type=int, required=True)
    p.set_defaults(func=_cmd_dim_count)

    p = sub.add_parser("normal-bundle", help="sections and rigidity for splitting type O(a)+O(b)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=_cmd_normal_bundle)

    p = sub.add_parser("tally-checks", help="verify published component tallies against totals")
    p.set_defaults(func=_cmd_tally_checks)

    schubert = sub.add_parser("schubert", help="Schubert-basis ring calculator").add_subparsers(
        dest="subcommand", required=True
    )
    p = schubert.add_parser("mult", help="product of two basis classes")
    p.add_argument("--grassmannian", type=_parse_grassmannian, required=True, help="r,N")
    p.add_argument("--a", type=_parse_partition, required=True)
    p.add_argument("--b", type=_parse_partition, required=True)
    p.set_defaults(func=_cmd_schubert_mult)
    p = schubert.add_parser("pieri", help="product with a special class")
    p.add_argument("--grassmannian", type=_parse_grassmannian, required=True)
    p.add_argument("--a", type=_parse_partition, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_schubert_pieri)
    p = schubert.add_parser("integrate", help="degree of a power of a basis class")
    p.add_argument("--grassmannian", type=_parse_grassmannian, required=True)
    p.add_argument("--a", type=_parse_partition, required=True)
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=_cmd_schubert_integrate)

    chern_cmd = sub.add_parser("chern", help="Chern-class calculator on Sym^d of the dual universal bundle").add_subparsers(
        dest="subcommand", required=True
    )
    p = chern_cmd.add_parser("sym", help="components of Sym^d(U*)")
    p.add_argument("--grassmannian", type=_parse_grassmannian, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_chern_sym)
    p = chern_cmd.add_parser("dual", help="components of the dual of Sym^d(U*)")
    p.add_argument("--grassmannian", type=_parse_grassmannian, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_chern_dual)
    p = chern_cmd.add_parser("twist", help="Sym^d(U*) twisted by a line with c1 = by * sigma_1")
    p.add_argument("--grassmannian", type=_parse_grassmannian, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--by", type=int, required=True)
    p.set_defaults(func=_cmd_chern_twist)
    p = chern_cmd.add_parser("quotient", help="c(Sym^num U*) / c(Sym^den U*)")
    p.add_argument("--grassmannian", type=_parse_grassmannian, required=True)
    p.add_argument("--num", type=int, required=True)
    p.add_argument("--den", type=int, required=True)
    p.set_defaults(func=_cmd_chern_quotient)
    p = chern_cmd.add_parser("segre", help="Segre classes of Sym^d(U*)")
    p.add_argument("--grassmannian", type=_parse_grassmannian, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--trunc", type=int, default=None)
    p.set_defaults(func=_cmd_chern_segre)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = CliConfig(
        output_format=args.output_format,
        trace=args.trace,
        cache_dir=args.cache_dir or os.environ.get(CACHE_DIR_ENV),
    )
    if config.cache_dir:
        chern.set_universal_cache_dir(config.cache_dir)
    try:
        args.func(args, config)
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    except CurveCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(run())
