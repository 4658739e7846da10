"""``nervekit`` command line.

Exit codes: 0 success or "yes", 1 well-formed "no"/reject, 2 invalid input or
internal error.  Payloads go to stdout as canonical JSON; errors go to stderr
as a single JSON line ``{"error": <kind>, "message": <text>}``.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import jsonio
from .classify import classify, figure_tables
from .complex import ComplexError, helly_fill, skeleton, suspension
from .geometry import GeometryError
from .lifting import lift_suspension, project_suspension
from .nerve import (CertificateError, FamilyError, full_nerve, nerve_skeleton,
                    verify_certificate)
from .oracle import GeneratorConfig, brute_nerve, random_family
from .recognize import decide_R_k11


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(doc) -> None:
    sys.stdout.write(jsonio.dumps(doc) + "\n")


def _fail(kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}, sort_keys=True) + "\n")
    return 2


def cmd_nerve(args) -> int:
    F = jsonio.family_from_json(jsonio.load_path(args.family))
    K = full_nerve(F) if args.full else nerve_skeleton(F, args.k)
    _emit(jsonio.complex_to_json(K))
    return 0


def cmd_skeleton(args) -> int:
    K = jsonio.complex_from_json(jsonio.load_path(args.complex))
    _emit(jsonio.complex_to_json(skeleton(K, args.k)))
    return 0


def cmd_suspend(args) -> int:
    K = jsonio.complex_from_json(jsonio.load_path(args.complex))
    _emit(jsonio.complex_to_json(suspension(K, args.a, args.b)))
    return 0


def cmd_helly_fill(args) -> int:
    K = jsonio.complex_from_json(jsonio.load_path(args.complex))
    _emit(jsonio.complex_to_json(helly_fill(K, args.h)))
    return 0


def cmd_lift(args) -> int:
    F = jsonio.family_from_json(jsonio.load_path(args.family))
    _emit(jsonio.family_to_json(lift_suspension(F, args.j, args.a, args.b)))
    return 0


def cmd_project(args) -> int:
    F = jsonio.family_from_json(jsonio.load_path(args.family))
    _emit(jsonio.family_to_json(project_suspension(F, args.a, args.b)))
    return 0


def cmd_verify(args) -> int:
    K = jsonio.complex_from_json(jsonio.load_path(args.complex))
    cert = jsonio.certificate_from_json(jsonio.load_path(args.certificate))
    verdict = verify_certificate(K, args.k, args.j, args.d, cert)
    _emit({"accepted": verdict.accepted, "diagnostics": verdict.diagnostics})
    if not verdict:
        sys.stderr.write(verdict.diagnostics + "\n")
    return 0 if verdict else 1


def cmd_decide(args) -> int:
    K = jsonio.complex_from_json(jsonio.load_path(args.complex))
    decision = decide_R_k11(K, args.k)
    doc = {"answer": decision.answer, "reason": decision.reason}
    if decision.witness is not None:
        doc["witness"] = jsonio.family_to_json(decision.witness)
        if args.witness:
            Path(args.witness).write_text(jsonio.dumps(doc["witness"]) + "\n", encoding="utf-8")
    _emit(doc)
    return 0 if decision else 1


def cmd_classify(args) -> int:
    _emit(classify(args.k, args.j, args.d).to_json())
    return 0


def cmd_table(args) -> int:
    sys.stdout.write(figure_tables(args.max_k, args.max_d, args.max_d) + "\n")
    return 0


def cmd_random_family(args) -> int:
    cfg = GeneratorConfig(seed=args.seed, count=args.count, ambient_dim=args.d,
                          flat_dim=args.flat_dim, coordinate_bound=args.coordinate_bound,
                          max_generators=args.max_generators, exact_dim=args.exact_dim,
                          flat_pool=args.flat_pool, anchor=args.anchor)
    _emit(jsonio.family_to_json(random_family(cfg)))
    return 0


def cmd_oracle_nerve(args) -> int:
    F = jsonio.family_from_json(jsonio.load_path(args.family))
    _emit(jsonio.complex_to_json(brute_nerve(F)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nervekit", description="Exact nerves of convex polytope families")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nerve", help="k-skeleton (or full nerve) of a family")
    s.add_argument("--family", required=True)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--full", action="store_true")
    s.set_defaults(func=cmd_nerve)

    s = sub.add_parser("skeleton", help="k-skeleton of a complex")
    s.add_argument("--complex", required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_skeleton)

    s = sub.add_parser("suspend", help="suspension of a complex")
    s.add_argument("--complex", required=True)
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_suspend)

    s = sub.add_parser("helly-fill", help="fill faces whose small subsets are all present")
    s.add_argument("--complex", required=True)
    s.add_argument("--h", type=int, required=True)
    s.set_defaults(func=cmd_helly_fill)

    s = sub.add_parser("lift", help="lift a realization to a realization of its suspension")
    s.add_argument("--family", required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("project", help="project a suspension realization back down")
    s.add_argument("--family", required=True)
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_project)

    s = sub.add_parser("verify", help="check a realization certificate")
    s.add_argument("--complex", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--certificate", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("decide-r-k11", help="decide R(k,1,1) with an interval witness")
    s.add_argument("--complex", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--witness")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("classify", help="complexity status of R(k,j,d)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("table", help="status tables for small k, j, d")
    s.add_argument("--max-k", type=int, default=4)
    s.add_argument("--max-d", type=int, default=8)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("random-family", help="seeded random polytope family")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--flat-dim", type=int)
    s.add_argument("--coordinate-bound", type=int, default=4)
    s.add_argument("--max-generators", type=int, default=4)
    s.add_argument("--flat-pool", type=int)
    s.add_argument("--exact-dim", action="store_true")
    s.add_argument("--anchor", action="store_true")
    s.set_defaults(func=cmd_random_family)

    s = sub.add_parser("oracle-nerve", help="nerve by exhaustive subfamily tests")
    s.add_argument("--family", required=True)
    s.set_defaults(func=cmd_oracle_nerve)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail("usage", str(exc))
    try:
        return args.func(args)
    except OSError as exc:
        return _fail("io", str(exc))
    except jsonio.FormatError as exc:
        return _fail("format", str(exc))
    except (ComplexError, GeometryError, FamilyError, CertificateError, ValueError) as exc:
        return _fail("invalid-input", str(exc))
    except Exception as exc:  # noqa: BLE001 - contract: exit 2 on internal errors
        return _fail("internal", f"{type(exc).__name__}: {exc}")


if __name__ == "__main__":
    sys.exit(main())
