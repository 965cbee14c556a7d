"""Command-line front end: ``koszul <verb> [flags]``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from pathlib import Path
from typing import Sequence

from .capelli import (
    capelli_bitableau,
    capelli_cdet,
    capelli_H,
    capelli_K,
    column_capelli,
    column_capelli_star,
    right_young_capelli,
    star_capelli_bitableau,
)
from .enveloping import UEAElement, element_from_json, element_to_json, parse_element
from .koszul_map import inverse_koszul, koszul
from .linalg import coordinate_rows, integer_rank
from .polynomials import Poly, bitableau, parse_poly, poly_from_json, poly_to_json
from .tableaux import Tableau, parse_tableau, partition, partitions_of
from .verify import (
    ORACLE_FLAVORS,
    SUITES,
    SuiteResult,
    _Tally,
    all_monomials,
    costandard_pairs,
    oracle_check_pair,
    oracle_suite,
    run_suites,
    standard_pairs,
)

MAX_N = 5
MAX_DEGREE = 6
MAX_SHAPE = 6

VERBS = ("expand", "koszul", "inverse-koszul", "central", "verify", "oracle-check", "basis-count")
TYPES = ("capelli", "star", "young", "column", "column-star")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="koszul",
        description="Capelli bitableaux, the Koszul map and verification suites for U(gl(n)).",
    )
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("--n", type=int, help="matrix size / alphabet bound")
    parser.add_argument("--left", help='left tableau, e.g. "1 2 / 2 4"')
    parser.add_argument("--right", help="right tableau")
    parser.add_argument("--type", choices=TYPES, default="capelli", dest="kind")
    parser.add_argument("--k", type=int, help="index of the Capelli element H_k")
    parser.add_argument("--shape", help='partition, e.g. "2 2"')
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--element-file", type=Path, help="element or polynomial, JSON or text")
    parser.add_argument("--suite", default="all", help="comma-separated suite names or 'all'")
    parser.add_argument("--max-degree", type=int, default=3)
    parser.add_argument("--unsafe-sizes", action="store_true", help="lift the size guards")
    return parser


# -- argument helpers ---------------------------------------------------------


def _guard(args: argparse.Namespace, what: str, value: int, limit: int) -> None:
    if value > limit and not args.unsafe_sizes:
        raise UsageError(f"{what}={value} exceeds the size guard {limit}; pass --unsafe-sizes to override")


def _require_n(args: argparse.Namespace, default: int | None = None) -> int:
    n = args.n if args.n is not None else default
    if n is None:
        raise UsageError("--n is required")
    if n < 1:
        raise UsageError(f"--n must be positive, got {n}")
    _guard(args, "n", n, MAX_N)
    return n


def _tableau_pair(args: argparse.Namespace) -> tuple[Tableau, Tableau]:
    if args.left is None or args.right is None:
        raise UsageError("--left and --right are required")
    s, t = parse_tableau(args.left), parse_tableau(args.right)
    if args.kind.startswith("column"):
        if len(s.reading_word()) != len(t.reading_word()):
            raise UsageError("column pair of unequal depths")
    elif s.shape != t.shape:
        raise UsageError(f"tableaux of different shapes: {s.shape} vs {t.shape}")
    _guard(args, "|shape|", s.size, MAX_SHAPE)
    if args.n is not None:
        n = _require_n(args)
        s.check_alphabet(n)
        t.check_alphabet(n)
    return s, t


def _build(kind: str, s: Tableau, t: Tableau) -> UEAElement:
    if kind == "column":
        return column_capelli(s.reading_word(), t.reading_word())
    if kind == "column-star":
        return column_capelli_star(s.reading_word(), t.reading_word())
    return {"capelli": capelli_bitableau, "star": star_capelli_bitableau, "young": right_young_capelli}[
        kind
    ](s, t)


def _read_payload(path: Path):
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _load_element(path: Path) -> UEAElement:
    data = _read_payload(path)
    return parse_element(data) if isinstance(data, str) else element_from_json(data)


def _load_poly(path: Path) -> Poly:
    data = _read_payload(path)
    return parse_poly(data) if isinstance(data, str) else poly_from_json(data)


def _check_indices(indices, n: int | None) -> None:
    if n is None:
        return
    bad = [x for x in indices if not 1 <= x <= n]
    if bad:
        raise UsageError(f"index {bad[0]} outside 1..{n}")


def _emit_element(m: UEAElement, fmt: str) -> None:
    print(json.dumps(element_to_json(m)) if fmt == "json" else m)


def _emit_poly(p: Poly, fmt: str) -> None:
    print(json.dumps(poly_to_json(p)) if fmt == "json" else p)


# -- verbs --------------------------------------------------------------------


def cmd_expand(args: argparse.Namespace) -> int:
    s, t = _tableau_pair(args)
    _emit_element(_build(args.kind, s, t), args.format)
    return 0


def cmd_koszul(args: argparse.Namespace) -> int:
    if args.element_file is not None:
        m = _load_element(args.element_file)
    else:
        m = _build(args.kind, *_tableau_pair(args))
    if m:
        _guard(args, "degree", m.degree(), MAX_DEGREE)
    n = _require_n(args) if args.n is not None else None
    _check_indices([x for w in m.terms for g in w for x in g], n)
    _emit_poly(koszul(m), args.format)
    return 0


def cmd_inverse_koszul(args: argparse.Namespace) -> int:
    if args.element_file is None:
        raise UsageError("--element-file is required")
    p = _load_poly(args.element_file)
    if p:
        _guard(args, "degree", p.degree(), MAX_DEGREE)
    n = _require_n(args) if args.n is not None else None
    _check_indices([x for m in p.terms for i, j, _ in m for x in (i, j)], n)
    _emit_element(inverse_koszul(p), args.format)
    return 0


def cmd_central(args: argparse.Namespace) -> int:
    n = _require_n(args)
    if args.k is not None and args.shape is not None:
        raise UsageError("--k and --shape are mutually exclusive")
    if args.k is not None:
        if not 1 <= args.k <= n:
            raise UsageError(f"--k must lie in 1..{n}")
        m = capelli_H(args.k, n)
    elif args.shape is not None:
        shape = partition(int(x) for x in args.shape.split())
        _guard(args, "|shape|", sum(shape), MAX_SHAPE)
        if shape and shape[0] > n:
            raise UsageError(f"first part of {shape} exceeds n={n}")
        m = capelli_K(shape, n)
    else:
        m = capelli_cdet(n)
    _emit_element(m, args.format)
    return 0


def _report(results: list[SuiteResult], fmt: str) -> int:
    if fmt == "json":
        print(json.dumps([r.__dict__ for r in results]))
    else:
        for r in results:
            print(r.summary())
    return 0 if all(r.passed for r in results) else 1


def cmd_verify(args: argparse.Namespace) -> int:
    n = _require_n(args, default=2)
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    _guard(args, "degree", args.max_degree, MAX_DEGREE)
    names = list(SUITES) if args.suite == "all" else [x.strip() for x in args.suite.split(",") if x.strip()]
    unknown = [x for x in names if x not in SUITES]
    if unknown or not names:
        raise UsageError(f"unknown suite(s): {', '.join(unknown) or '(none)'}; choose from {', '.join(SUITES)}")
    return _report(run_suites(names, n, args.max_degree), args.format)


def cmd_oracle_check(args: argparse.Namespace) -> int:
    n = _require_n(args, default=3)
    _guard(args, "degree", args.max_degree, MAX_DEGREE)
    if args.left is None and args.right is None:
        return _report([oracle_suite(n, args.max_degree)], args.format)
    if args.kind.startswith("column"):
        raise UsageError("oracle-check takes --type capelli, star or young")
    args.n = n
    s, t = _tableau_pair(args)
    flavors = [f for f in ORACLE_FLAVORS if f[0] == args.kind]
    tally = _Tally(f"oracle {args.kind}")
    oracle_check_pair(s, t, list(all_monomials(args.max_degree, n)), tally, flavors)
    return _report([tally.result()], args.format)


def cmd_basis_count(args: argparse.Namespace) -> int:
    n = _require_n(args, default=2)
    _guard(args, "degree", args.max_degree, MAX_DEGREE)
    rows = []
    for d in range(1, args.max_degree + 1):
        pairs = [p for shape in partitions_of(d, n) for p in standard_pairs(shape, n)]
        co = [p for shape in partitions_of(d) if len(shape) <= n for p in costandard_pairs(shape, n)]
        rank = integer_rank(coordinate_rows([bitableau(s, t).terms for s, t in pairs]))
        rows.append(
            {
                "degree": d,
                "standard_pairs": len(pairs),
                "costandard_pairs": len(co),
                "monomials": comb(n * n + d - 1, d),
                "rank": rank,
            }
        )
    ok = all(r["standard_pairs"] == r["costandard_pairs"] == r["monomials"] == r["rank"] for r in rows)
    if args.format == "json":
        print(json.dumps(rows))
    else:
        for r in rows:
            print(
                f"d={r['degree']} standard_pairs={r['standard_pairs']} costandard_pairs={r['costandard_pairs']}"
                f" monomials={r['monomials']} rank={r['rank']}"
            )
    return 0 if ok else 1


COMMANDS = {
    "expand": cmd_expand,
    "koszul": cmd_koszul,
    "inverse-koszul": cmd_inverse_koszul,
    "central": cmd_central,
    "verify": cmd_verify,
    "oracle-check": cmd_oracle_check,
    "basis-count": cmd_basis_count,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return COMMANDS[args.verb](args)
    except (UsageError, ValueError, KeyError, TypeError) as exc:
        print(f"koszul: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
