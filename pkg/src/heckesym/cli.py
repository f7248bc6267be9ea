"""Command-line front end.

Exit codes: 0 success, 1 axiom failure, 2 parse error, 3 inconclusive,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bigalois, comodules, integral, koszul
from .combinatorics import GAMMA_VARIANTS, OMEGA_VARIANTS, Partition, gamma_set
from .errors import (AxiomFailure, DegenerateQ, HeckeError, Inconclusive, InvariantViolation,
                     ParseError, VerificationFailed)
from .scalars import GENERIC, NumericField, format_scalar
from .symmetry import format_matrix, quantum_rank, resolve

EXIT_OK, EXIT_AXIOM, EXIT_PARSE, EXIT_INCONCLUSIVE, EXIT_INVARIANT = 0, 1, 2, 3, 4


def _field(args):
    if args.v is None:
        return GENERIC
    try:
        return NumericField(v=Fraction(args.v))
    except ValueError as exc:
        raise ParseError(f"bad --v value {args.v!r}: {exc}") from None


def _load(args, path):
    return resolve(path, _field(args))


def _conventions(args):
    return integral.Conventions(args.index_convention, args.omega_variant, "rows_r")


def _flags(args):
    return {"gamma_variant": args.gamma_variant, "omega_variant": args.omega_variant,
            "index_convention": args.index_convention, "guard": args.guard,
            "n_max": args.n_max, "budget": args.budget}


# -- commands -----------------------------------------------------------------


def cmd_verify(args):
    h = _load(args, args.path)
    return {
        "symmetry": h.name, "dimension": h.d, "field": h.field.describe(),
        "yang_baxter": True, "hecke": True, "closed": True,
        "P": format_matrix(h.P), "C": format_matrix(h.C),
        "trace_C": format_scalar(quantum_rank(h)),
    }


def cmd_birank(args):
    h = _load(args, args.path)
    profile = comodules.poincare_profile(h, args.n_max, args.guard, args.budget)
    return {"symmetry": h.name, "birank": list(profile.birank), "dims": profile.dims,
            "numerator": profile.numerator_str, "denominator": profile.denominator_str}


def cmd_dims(args):
    h = _load(args, args.path)
    n_max = args.n_max if args.n_max is not None else 4
    return {"symmetry": h.name,
            "sym": [comodules.sym_dim(h, n, args.budget) for n in range(n_max + 1)],
            "ext": [comodules.ext_dim(h, n, args.budget) for n in range(n_max + 1)]}


def cmd_simple(args):
    h = _load(args, args.path)
    lam = Partition.parse(args.partition)
    out = {"symmetry": h.name, "partition": str(lam), "dim": comodules.simple_dim(h, lam, args.budget)}
    if args.check:
        out["idempotent_image_dim"] = comodules.unit_image_dim(h, lam)
    return out


def cmd_decompose(args):
    h = _load(args, args.path)
    dec = comodules.decompose_tensor_power(h, args.n, args.budget)
    r, s = comodules.birank(h, budget=args.budget)
    gamma = set(gamma_set(args.n, r, s, args.gamma_variant))
    return {"symmetry": h.name, "n": args.n, "total": dec.total,
            "parts": [{"partition": str(lam), "multiplicity": m, "dim": dim, "in_gamma": lam in gamma}
                      for lam, (m, dim) in dec.parts.items()]}


def cmd_koszul(args):
    h = _load(args, args.path)
    rep = koszul.homology_dims(h, args.a, args.window, args.budget)
    out = {"symmetry": h.name}
    out.update(rep.to_dict())
    out["euler_consistent"] = koszul.check_euler(rep)
    return out


def cmd_integral(args):
    h = _load(args, args.path)
    conv = _conventions(args)
    table = integral.integral_table(h, args.n, conv, args.budget)
    reports = [integral.zero_degree_check(h, args.n, conv),
               integral.contraction_check(h, args.n, conv),
               integral.rt_relation_check(h, args.n, conv, table)]
    out = {"symmetry": h.name, "n": args.n, "birank": list(comodules.birank(h)),
           "nonzero_entries": len(table.values), "identically_zero": table.is_zero(),
           "checks": [r.to_dict() for r in reports]}
    if args.show_table:
        d = h.d
        out["table"] = [{"I": list(_mi(k[0], d, args.n)), "J": list(_mi(k[1], d, args.n)),
                         "K": list(_mi(k[2], d, args.n)), "L": list(_mi(k[3], d, args.n)),
                         "value": format_scalar(v)} for k, v in sorted(table.values.items())]
    return out


def _mi(c, d, n):
    from .linalg import multi_index
    return multi_index(c, d, n)


def cmd_equiv(args):
    hL, hR = _load(args, args.left), _load(args, args.right)
    rep = bigalois.equivalence_report(hL, hR, args.n_max, args.budget, check_relations=args.relations)
    out = {"left": hL.name, "right": hR.name}
    out.update(rep.to_dict())
    return out


COMMANDS = {"verify": cmd_verify, "birank": cmd_birank, "dims": cmd_dims, "simple": cmd_simple,
            "decompose": cmd_decompose, "koszul": cmd_koszul, "integral": cmd_integral,
            "equiv": cmd_equiv}


# -- plumbing -----------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-max", type=int, default=None, help="highest degree to compute")
    common.add_argument("--guard", type=int, default=comodules.DEFAULT_GUARD,
                        help="extra terms a rational fit must reproduce")
    common.add_argument("--budget", type=int, default=comodules.DEFAULT_BUDGET,
                        help="largest allowed d^n")
    common.add_argument("--window", type=int, default=4, help="number of Koszul terms")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", default=None, help="write the report here")
    common.add_argument("--gamma-variant", choices=GAMMA_VARIANTS, default="hook")
    common.add_argument("--omega-variant", choices=OMEGA_VARIANTS, default="hook")
    common.add_argument("--index-convention", choices=integral.READINGS, default=integral.SHIPPED.reading,
                        metavar="READING", help="slot order for the integral (default %(default)s)")
    common.add_argument("--v", default=None, help="specialize v (and q = v^2) to a rational number")

    parser = argparse.ArgumentParser(prog="heckesym", description="Exact computations with Hecke symmetries.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("verify", parents=[common], help="check the axioms, print P, C and tr C")
    p.add_argument("path")
    p = sub.add_parser("birank", parents=[common], help="bi-rank from the exterior-algebra Poincare series")
    p.add_argument("path")
    p = sub.add_parser("dims", parents=[common], help="dimensions of symmetric and exterior powers")
    p.add_argument("path")
    p = sub.add_parser("simple", parents=[common], help="dimension of a simple comodule")
    p.add_argument("path")
    p.add_argument("partition", help="e.g. 2,1")
    p.add_argument("--check", action="store_true", help="also compute the idempotent-image rank")
    p = sub.add_parser("decompose", parents=[common], help="decompose the n-th tensor power")
    p.add_argument("path")
    p.add_argument("n", type=int)
    p = sub.add_parser("koszul", parents=[common], help="homology of the Koszul complex K^a")
    p.add_argument("path")
    p.add_argument("a", type=int)
    p = sub.add_parser("integral", parents=[common], help="integral table and its relation checks")
    p.add_argument("path")
    p.add_argument("n", type=int)
    p.add_argument("--show-table", action="store_true")
    p = sub.add_parser("equiv", parents=[common], help="decide monoidal equivalence of two symmetries")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--relations", action="store_true", help="also run the relation suites")
    return parser


def _text(report, indent=""):
    lines = []
    for key, val in report.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text(val, indent + "  "))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{indent}{key}:")
            for item in val:
                lines.append(f"{indent}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"{indent}{key}: {val}")
    return lines


def _emit(report, args):
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2)
    else:
        text = "\n".join(_text(report))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _exit_code(exc):
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, (AxiomFailure, VerificationFailed)):
        return EXIT_AXIOM
    if isinstance(exc, (Inconclusive, DegenerateQ)):
        return EXIT_INCONCLUSIVE
    return EXIT_INVARIANT


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = COMMANDS[args.command](args)
    except HeckeError as exc:
        code = _exit_code(exc)
        err = {"command": args.command, "error": type(exc).__name__, "message": str(exc),
               "witness": _jsonable(exc.witness), "conventions": _flags(args)}
        partial = getattr(exc, "partial", None)
        if partial is not None:
            err["partial_dims"] = partial
        _emit(err, args)
        return code
    report = {"command": args.command, **report, "conventions": _flags(args)}
    _emit(report, args)
    failed = any(not c.get("passed", True) for c in report.get("checks", []) + report.get("suites", []))
    return EXIT_INVARIANT if failed else EXIT_OK


def _jsonable(x):
    if x is None or isinstance(x, (int, str, bool)):
        return x
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return str(x)


if __name__ == "__main__":
    sys.exit(main())
