"""Command-line front end.

Exit codes: 0 success, 1 mathematical mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .degeneration import verify_chain
from .restriction import (
    billey_restriction,
    restrict_cohomology_recursion,
    restrict_graham_willems,
    restrict_kk,
    restrict_subword,
    restriction_json,
)
from .root_system import InvalidCartanType
from .subword import build_complex, verify_vertex_decomposition
from .sweep import sweep
from .weyl import DEFAULT_MAX_SIZE, GroupTooLarge, NotReducedError, WeylGroup, format_word, parse_word

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(data, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=False))
    else:
        print(text)


def _group(args) -> WeylGroup:
    try:
        return WeylGroup(args.type, max_size=args.max_size)
    except InvalidCartanType as e:
        raise UsageError(str(e)) from None


def _element(W: WeylGroup, text: str, name: str):
    try:
        return W.from_word(parse_word(text))
    except (ValueError, IndexError) as e:
        raise UsageError(f"--{name}: {e}") from None


def _word_for(W: WeylGroup, args, v):
    if args.word is None:
        return W.canonical_reduced_word(v)
    try:
        Q = W.check_word(parse_word(args.word))
    except (ValueError, IndexError) as e:
        raise UsageError(f"--word: {e}") from None
    if not W.is_reduced(Q):
        raise UsageError(f"--word {format_word(Q)} is not reduced in {W.cartan_type}")
    if W.from_word(Q) != v:
        raise UsageError(f"--word {format_word(Q)} is not a word for v")
    return Q


def cmd_restrict(args) -> int:
    W = _group(args)
    w = _element(W, args.w, "w")
    v = _element(W, args.v, "v")
    Q = _word_for(W, args, v)
    methods = {
        "kk": lambda: restrict_kk(W, w, v),
        "subword": lambda: restrict_subword(W, w, v, Q),
        "gw": lambda: restrict_graham_willems(W, w, v, Q),
    }
    chosen = list(methods) if args.method == "all" else [args.method]
    values = {m: methods[m]() for m in chosen}
    distinct = set(values.values())
    if len(distinct) > 1:
        for m, val in values.items():
            print(f"{m}: {val}", file=sys.stderr)
        print("methods disagree", file=sys.stderr)
        return EXIT_MISMATCH
    value = values[chosen[0]]
    _emit(restriction_json(W, w, v, Q, args.method, value), args.format, str(value))
    return EXIT_OK


def cmd_billey(args) -> int:
    W = _group(args)
    w = _element(W, args.w, "w")
    v = _element(W, args.v, "v")
    Q = _word_for(W, args, v)
    methods = {
        "facets": lambda: billey_restriction(W, w, v, Q),
        "recursion": lambda: restrict_cohomology_recursion(W, w, v),
    }
    chosen = list(methods) if args.method == "all" else [args.method]
    values = {m: methods[m]() for m in chosen}
    if len(set(values.values())) > 1:
        for m, val in values.items():
            print(f"{m}: {val}", file=sys.stderr)
        print("methods disagree", file=sys.stderr)
        return EXIT_MISMATCH
    value = values[chosen[0]]
    _emit(restriction_json(W, w, v, Q, args.method, value), args.format, str(value))
    return EXIT_OK


def _complex_from_args(args):
    W = _group(args)
    w = _element(W, args.w, "w")
    try:
        Q = W.check_word(parse_word(args.word))
    except (ValueError, IndexError) as e:
        raise UsageError(f"--word: {e}") from None
    if not W.is_reduced(Q):
        raise UsageError(f"--word {format_word(Q)} is not reduced in {W.cartan_type}")
    return W, Q, w


def cmd_complex(args) -> int:
    W, Q, w = _complex_from_args(args)
    D = build_complex(W, Q, w)
    data = D.to_json()
    data["type"] = str(W.cartan_type)
    if D.is_void:
        data["note"] = "void"
        _emit(data, args.format, f"facets []\nnote void")
        return EXIT_OK
    checks = {
        "purity": all(len(F) == D.facet_size for F in D.facets),
        "ridges_in_one_or_two_facets": all(c in (1, 2) for c in D.ridge_incidence.values()),
        "interior_characterizations_agree": D.interior_faces_demazure() == D.interior_faces_topological(),
        "k_polynomial_interior": D.k_polynomial_interior() == D.k_polynomial(),
    }
    case = None
    if Q:
        vd = verify_vertex_decomposition(W, Q, w)
        case = vd.case
        checks["vertex_decomposition"] = vd.ok
    data.update(
        faces=len(D.faces),
        euler=D.euler_characteristic(),
        vertex_decomposition_case=case,
        k_polynomial=D.k_polynomial().to_json(),
        checks=checks,
    )
    lines = [
        f"facets {data['facets']}",
        f"faces {data['faces']}",
        f"interior {data['interior']}",
        f"euler {data['euler']}",
        f"case {case if case is not None else '-'}",
        f"k {D.k_polynomial()}",
    ]
    lines += [f"check {k}: {'ok' if ok else 'FAIL'}" for k, ok in checks.items()]
    _emit(data, args.format, "\n".join(lines))
    return EXIT_OK if all(checks.values()) else EXIT_MISMATCH


def cmd_chain(args) -> int:
    W, Q, w = _complex_from_args(args)
    if not W.bruhat_leq(w, W.from_word(Q)):
        raise UsageError("chain needs w <= v")
    report = verify_chain(W, Q, w)
    lines = [f"stage {i}: " + " ".join(
        f"({format_word(p.to_json()['wprime_word']) or 'e'};{{{format_word(sorted(p.S))}}})" for p in pairs
    ) for i, pairs in enumerate(report.stages)]
    lines += [f"check {k}: {'ok' if ok else 'FAIL'}" for k, ok in sorted(report.checks.items())]
    lines += [f"failure: {f}" for f in report.failures]
    _emit(report.to_json(), args.format, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_sweep(args) -> int:
    cap = args.max_words_per_v or None
    try:
        report = sweep(args.type, max_words_per_v=cap, jobs=args.jobs, max_size=args.max_size)
    except (InvalidCartanType, GroupTooLarge) as e:
        raise UsageError(str(e)) from None
    lines = [
        f"type {report.group}: {report.pairs} pairs w<=v, {report.instances} instances, "
        f"{len(report.failures)} failures"
    ]
    lines += [f"  {name}: {count}" for name, count in sorted(report.checks.items())]
    for f in report.failures:
        lines.append(f"FAIL {f.check} w={format_word(f.w_word)} v={format_word(f.v_word)}: {f.detail}")
        lines.append(f"  reproduce: {f.reproducer}")
    _emit(report.to_json(timing=args.timing), args.format, "\n".join(lines))
    print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubloc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", required=True, help='Cartan type such as "A3", "B2", "G2"')
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE, help="group-size cap for enumeration")

    p = sub.add_parser("restrict", help="restriction S_w|_v in K_T(pt)")
    common(p)
    p.add_argument("--w", required=True, help='word for w, e.g. "2" or "" for the identity')
    p.add_argument("--v", required=True, help="word for v")
    p.add_argument("--word", help="reduced word Q for v (default: lexicographically least)")
    p.add_argument("--method", choices=("kk", "subword", "gw", "all"), default="all")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("billey", help="cohomological restriction sigma_w|_v")
    common(p)
    p.add_argument("--w", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--word")
    p.add_argument("--method", choices=("facets", "recursion", "all"), default="all")
    p.set_defaults(func=cmd_billey)

    p = sub.add_parser("complex", help="inspect the subword complex Delta(Q, w)")
    common(p)
    p.add_argument("--word", required=True, help="reduced word Q")
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("chain", help="verify the degeneration chain C_l -> ... -> C_0")
    common(p)
    p.add_argument("--word", required=True)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("sweep", help="cross-validate everything over a whole group")
    common(p)
    p.add_argument("--max-words-per-v", type=int, default=5, help="0 means all reduced words")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include elapsed time in JSON output")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"schubloc {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
