"""Command-line interface.

Exit status: 0 on success, 1 on any verification mismatch, 2 on usage
errors, 3 when a computation is refused for exceeding its budget.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .glrestrict import TABLE_ROWS, gay_check, restrict_gl_irrep
from .labels import (
    check_valid,
    degree,
    format_sequence,
    parse_sequence,
    restrict_sequence,
    tensor_with_defining,
)
from .partitions import ParseError, format_partition, parse_partition
from .schur_weyl import BudgetExceeded, balanced_dimension, schur_weyl_check
from .serialize import decomposition_to_json, dumps, format_lines, format_sum
from .symprod import (
    decompose_sym_product_to_irreps,
    decompose_sym_product_to_perm,
    invariant_dimension,
    invariant_dimension_in_weight,
    sym_product_specht_multiplicities,
    weak_foulkes_scan,
)
from .verify import default_grid, oracle_compare


def _parse_ks(text: str) -> tuple[int, ...]:
    out = []
    pos = 0
    for tok in text.split(","):
        if not tok.strip().isdigit() or int(tok) == 0:
            raise ParseError(f"bad degree {tok.strip()!r}", text, pos)
        out.append(int(tok))
        pos += len(tok) + 1
    return tuple(out)


def _fmt(args) -> str:
    return getattr(args, "format", None) or "text"


def _emit(args, text_lines: list[str], payload) -> None:
    if _fmt(args) == "json":
        print(dumps(payload))
    else:
        print("\n".join(text_lines))


def _ks_name(ks) -> str:
    return " x ".join(f"Sym^{k}" for k in ks) if ks else "trivial"


def cmd_sym_product(args) -> int:
    ks = _parse_ks(args.ks)
    if args.to == "perm":
        mults = decompose_sym_product_to_perm(ks, args.n)
    elif args.to == "irreps":
        mults = decompose_sym_product_to_irreps(ks, args.n, route=args.route)
    else:
        mults = sym_product_specht_multiplicities(ks, args.n)
    header = f"{_ks_name(ks)}(V) at n={args.n}:"
    _emit(args, [header] + format_lines(mults, args.to), decomposition_to_json(mults, args.n, args.to))
    return 0


def cmd_restrict_gl(args) -> int:
    lam = parse_partition(args.lam)
    mults = restrict_gl_irrep(lam, args.n)
    kind = "irreps"
    if args.to == "specht":
        kind = "specht"
        specht: dict = {}
        for seq, c in mults.items():
            for mu, k in restrict_sequence(seq, args.n).items():
                specht[mu] = specht.get(mu, 0) + c * k
        mults = specht
    header = f"W{format_partition(lam)} at n={args.n}:"
    _emit(args, [header] + format_lines(mults, kind), decomposition_to_json(mults, args.n, kind))
    return 0


def cmd_tensor_v(args) -> int:
    seq = parse_sequence(args.label)
    check_valid(seq, args.n)
    mults = {seq: 1}
    for _ in range(args.power):
        nxt: dict = {}
        for key, c in mults.items():
            for new, k in tensor_with_defining(key, args.n).items():
                nxt[new] = nxt.get(new, 0) + c * k
        mults = nxt
    header = f"V{format_sequence(seq)} x V^(x{args.power}) at n={args.n} (degree {degree(seq) + args.power}):"
    _emit(args, [header] + format_lines(mults, "irreps"), decomposition_to_json(mults, args.n, "irreps"))
    return 0


def cmd_invariants(args) -> int:
    ks = _parse_ks(args.ks)
    if args.weight is not None:
        mu = parse_partition(args.weight)
        value = invariant_dimension_in_weight(ks, args.n, mu)
        where = f" in weight {format_partition(mu)}"
    else:
        mu = None
        value = invariant_dimension(ks, args.n)
        where = ""
    payload = {"ks": list(ks), "ambient_n": args.n, "weight": None if mu is None else list(mu), "invariants": value}
    _emit(args, [f"S_{args.n}-invariants in {_ks_name(ks)}(V){where}: {value}"], payload)
    return 0


def cmd_foulkes(args) -> int:
    report = weak_foulkes_scan(args.a, args.b, args.alphabet)
    lines = [
        f"weak Foulkes a={report.a} b={report.b} alphabet={report.alphabet_bound}: "
        f"{report.checked} multisets checked, {len(report.counterexamples)} counterexamples"
    ]
    lines += [f"  COUNTEREXAMPLE {ms}: {s} < {t}" for ms, s, t in report.counterexamples]
    payload = {
        "a": report.a,
        "b": report.b,
        "alphabet_bound": report.alphabet_bound,
        "checked": report.checked,
        "counterexamples": [
            {"multiset": list(ms.counts), "b_parts_of_size_a": s, "a_parts_of_size_b": t}
            for ms, s, t in report.counterexamples
        ],
    }
    _emit(args, lines, payload)
    return 0 if report.ok else 1


def cmd_schur_weyl(args) -> int:
    balanced_dimension(args.k)  # refuse before doing any work
    reports = [schur_weyl_check(k, args.n) for k in range(1, args.k + 1)]
    lines = [f"{'k':>3} {'balanced':>10} {'End(n=' + str(args.n) + ')':>12}  check"]
    for r in reports:
        lines.append(f"{r.k:>3} {r.balanced:>10} {r.endomorphisms:>12}  {r.expected}: {'ok' if r.ok else 'FAIL'}")
    payload = {
        "ambient_n": args.n,
        "rows": [
            {"k": r.k, "balanced_dimension": r.balanced, "endomorphism_dimension": r.endomorphisms, "ok": r.ok}
            for r in reports
        ],
    }
    _emit(args, lines, payload)
    return 0 if all(r.ok for r in reports) else 1


def cmd_gay(args) -> int:
    report = gay_check(args.degree, args.n)
    lines = [f"Gay check d={report.degree} n={report.n}: {report.checked} pairs, {len(report.failures)} failures"]
    lines += [
        f"  FAIL lam={format_partition(l)} mu={format_partition(m)}: {a} != {b}"
        for l, m, a, b in report.failures
    ]
    payload = {
        "degree": report.degree,
        "ambient_n": report.n,
        "checked": report.checked,
        "failures": [
            {"lambda": list(l), "mu": list(m), "invariants": a, "induced": b} for l, m, a, b in report.failures
        ],
    }
    _emit(args, lines, payload)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    report = oracle_compare(default_grid(args.max_degree, args.max_n))
    lines = []
    for p in report.points:
        lines.append(f"{'PASS' if p.ok else 'FAIL'} ks={','.join(map(str, p.ks))} n={p.n}")
        if not p.ok:
            for name in ("oracle", "utype_kostka", "route_a", "route_b"):
                lines.append(f"    {name}: {format_sum(getattr(p, name), 'specht')}")
    lines.append(f"{len(report.points)} points, {len(report.failures)} failures")
    payload = {
        "points": [
            {
                "ks": list(p.ks),
                "ambient_n": p.n,
                "ok": p.ok,
                "oracle": decomposition_to_json(p.oracle, p.n, "specht")["summands"],
            }
            for p in report.points
        ],
        "failures": len(report.failures),
    }
    _emit(args, lines, payload)
    return 0 if report.ok else 1


def cmd_table(args) -> int:
    rows = []
    lines = []
    for lam in TABLE_ROWS:
        n = args.n if args.n is not None else sum(lam) + 1
        mults = restrict_gl_irrep(lam, n)
        name = "W(" + ",".join(map(str, lam)) + ")" if lam else "W(-)"
        lines.append(f"{name} -> {format_sum(mults, 'irreps')}")
        rows.append({"lambda": list(lam), **decomposition_to_json(mults, n, "irreps")})
    _emit(args, lines, {"rows": rows})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument(
        "--seed-order",
        action="store_true",
        default=argparse.SUPPRESS,
        help="fix enumeration order (always deterministic; accepted for reproducibility scripts)",
    )
    parser = argparse.ArgumentParser(
        prog="monomial-reps",
        description="Decompose polynomial GL_n representations over monomial matrices and S_n.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sym-product", parents=[common], help="decompose Sym^k1(V) x ... x Sym^km(V)")
    p.add_argument("--ks", required=True, help="comma-separated degrees, e.g. 2,2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--to", choices=("perm", "irreps", "specht"), default="irreps")
    p.add_argument("--route", choices=("A", "B"), default="A")
    p.set_defaults(func=cmd_sym_product)

    p = sub.add_parser("restrict-gl", parents=[common], help="restrict W(lambda) to T x| S_n")
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. [2,2]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--to", choices=("irreps", "specht"), default="irreps")
    p.set_defaults(func=cmd_restrict_gl)

    p = sub.add_parser("tensor-v", parents=[common], help="tensor a label with powers of V")
    p.add_argument("--label", required=True, help='partition sequence, e.g. "((1)|-|(1))"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=cmd_tensor_v)

    p = sub.add_parser("invariants", parents=[common], help="S_n-invariant dimensions")
    p.add_argument("--ks", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", default=None, help="symmetrized weight, e.g. [2,1]")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("foulkes", parents=[common], help="exhaustive weak Foulkes scan")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--alphabet", type=int, default=None, help="alphabet bound (default a*b)")
    p.set_defaults(func=cmd_foulkes)

    p = sub.add_parser("schur-weyl", parents=[common], help="balanced vs endomorphism dimensions")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_schur_weyl)

    p = sub.add_parser("gay", parents=[common], help="symmetrized-weight invariants vs normalizer inductions")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_gay)

    p = sub.add_parser("verify", parents=[common], help="compare all routes with the character oracle")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table-4-3", parents=[common], help="restrictions of all W(lambda), |lambda| <= 4")
    p.add_argument("--n", type=int, default=None, help="ambient n (default: degree + 1 per row)")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except ParseError as exc:
        parser.error(str(exc))
    except ValueError as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
