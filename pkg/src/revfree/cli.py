"""Command-line front end.

Exit codes: 0 on success (word valid, property holds, search completed),
1 when a checked property fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .avoidance import AvoidanceQuery, ConflictWitness, SquareWitness, find_conflict
from .morphisms import (
    Morphism,
    all_words_universe,
    apply,
    image_factor_set,
    marker_sync_check,
    parse_morphism,
    squarefree_morphism_test,
    squarefree_words_universe,
)
from .search import (
    ExceedsCap,
    Finite,
    STANDARD_PREAMBLES,
    enumerate_valid,
    match_ultimately_periodic,
    max_valid_length,
    rotation_family,
)
from .words import (
    Builtin,
    FactorSet,
    MorphicImage,
    Periodic,
    Word,
    factors,
    periodic_factors,
    stream_prefix,
)


class UsageError(Exception):
    pass


def _parse_word(text: str, alphabet_size: int) -> Word:
    try:
        return Word.parse(text, alphabet_size)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load_morphism(path: str) -> Morphism:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_morphism(fh.read())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load morphism from {path}: {exc}") from exc


def _emit_factor_set(fs: FactorSet, as_json: bool) -> None:
    if as_json:
        print(json.dumps({
            "version": __version__,
            "length": fs.length,
            "members": [str(w) for w in fs],
        }))
    else:
        for w in fs:
            print(w)


def cmd_check(args: argparse.Namespace) -> int:
    word = _parse_word(args.word, args.alphabet)
    q = AvoidanceQuery(args.k, args.squarefree)
    conflict = find_conflict(word, q)
    if args.json:
        payload: dict = {
            "version": __version__,
            "word": str(word),
            "alphabet": args.alphabet,
            "k": args.k,
            "squarefree": args.squarefree,
            "valid": conflict is None,
        }
        if isinstance(conflict, ConflictWitness):
            payload["conflict"] = {
                "kind": "reversal",
                "x": str(conflict.x),
                "position_x": conflict.position_x,
                "position_xr": conflict.position_xr,
            }
        elif isinstance(conflict, SquareWitness):
            payload["conflict"] = {
                "kind": "square",
                "x": str(conflict.x),
                "position": conflict.position,
            }
        print(json.dumps(payload))
    else:
        if conflict is None:
            print("valid")
        elif isinstance(conflict, ConflictWitness):
            print(
                f"conflict: {conflict.x} at {conflict.position_x} "
                f"reversed at {conflict.position_xr}"
            )
        else:
            print(f"square: {conflict.x}{conflict.x} at {conflict.position}")
    return 0 if conflict is None else 1


def cmd_factors(args: argparse.Namespace) -> int:
    if args.period is not None:
        period = _parse_word(args.period, args.alphabet)
        preamble = _parse_word(args.preamble or "", args.alphabet)
        try:
            fs = periodic_factors(Periodic(preamble, period), args.length)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif args.word is not None:
        fs = factors(_parse_word(args.word, args.alphabet), args.length)
    else:
        raise UsageError("factors needs --word or --period")
    _emit_factor_set(fs, args.json)
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    q = AvoidanceQuery(args.k, args.squarefree)
    start = time.perf_counter()
    outcome = max_valid_length(args.alphabet, q, args.cap, args.fix_first)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    report: dict = {
        "version": __version__,
        "query": {
            "alphabet": args.alphabet,
            "k": args.k,
            "squarefree": args.squarefree,
            "cap": args.cap,
        },
        "nodes_explored": outcome.nodes_explored,
        "wall_time_ms": round(elapsed_ms, 3),
    }
    if isinstance(outcome, Finite):
        report["outcome"] = "finite"
        report["max_length"] = outcome.max_length
        report["witnesses"] = [str(w) for w in outcome.witnesses]
    else:
        report["outcome"] = "exceeds-cap"
        report["cap"] = outcome.cap
        report["sample_survivor"] = str(outcome.sample_survivor)
    print(json.dumps(report))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    q = AvoidanceQuery(args.k, args.squarefree)
    found = enumerate_valid(args.alphabet, q, args.length)
    if args.json:
        print(json.dumps({
            "version": __version__,
            "alphabet": args.alphabet,
            "k": args.k,
            "squarefree": args.squarefree,
            "length": args.length,
            "count": len(found),
            "words": [str(w) for w in found],
        }))
    else:
        for w in found:
            print(w)
    return 0


def cmd_morphic_apply(args: argparse.Namespace) -> int:
    h = _load_morphism(args.morphism)
    word = _parse_word(args.word, h.domain_size)
    print(apply(h, word))
    return 0


def cmd_morphic_stream(args: argparse.Namespace) -> int:
    h = _load_morphism(args.morphism)
    if args.inner_builtin is not None:
        try:
            inner = Builtin(args.inner_builtin)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif args.inner_period is not None:
        period = _parse_word(args.inner_period, h.domain_size)
        preamble = _parse_word(args.inner_preamble or "", h.domain_size)
        try:
            inner = Periodic(preamble, period)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        raise UsageError("morphic stream needs --inner-builtin or --inner-period")
    try:
        print(stream_prefix(MorphicImage(h, inner), args.length))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0


def cmd_morphic_factor_set(args: argparse.Namespace) -> int:
    h = _load_morphism(args.morphism)
    if args.squarefree_universe:
        universe = squarefree_words_universe(h.domain_size, args.universe_length)
    else:
        universe = all_words_universe(h.domain_size, args.universe_length)
    try:
        fs = image_factor_set(h, args.k, universe)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit_factor_set(fs, args.json)
    return 0


def cmd_morphic_marker(args: argparse.Namespace) -> int:
    h = _load_morphism(args.morphism)
    marker = _parse_word(args.marker, h.codomain_size)
    try:
        report = marker_sync_check(h, marker)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(json.dumps({
            "version": __version__,
            "marker": str(report.marker),
            "synchronized": report.synchronized,
            "occurrences": [
                {"pair": f"{a}{b}", "offset": offset}
                for (a, b), offset in report.occurrences
            ],
        }))
    else:
        print("synchronized" if report.synchronized else "not synchronized")
        for (a, b), offset in report.occurrences:
            print(f"  in image of {a}{b} at offset {offset}")
    return 0 if report.synchronized else 1


def cmd_morphic_squarefree_test(args: argparse.Namespace) -> int:
    h = _load_morphism(args.morphism)
    try:
        result = squarefree_morphism_test(h)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(json.dumps({
            "version": __version__,
            "passed": result.passed,
            "preimages": [str(w) for w in result.preimages],
            "failing": None if result.failing is None else str(result.failing),
        }))
    else:
        if result.passed:
            print(f"pass ({len(result.preimages)} preimages)")
        else:
            print(f"fail on {result.failing}")
    return 0 if result.passed else 1


def cmd_match_periodic(args: argparse.Namespace) -> int:
    prefix = _parse_word(args.word, 2)
    b = rotation_family(Word.parse("001011", 2))
    try:
        match = match_ultimately_periodic(prefix, b, STANDARD_PREAMBLES)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(json.dumps({
            "version": __version__,
            "word": str(prefix),
            "matched": match is not None,
            "preamble": None if match is None else str(match[0]),
            "period": None if match is None else str(match[1]),
        }))
    else:
        if match is None:
            print("no match")
        else:
            print(f"preamble={match[0]} period={match[1]}")
    return 0 if match is not None else 1


def cmd_verify_paper(args: argparse.Namespace) -> int:
    from .verification import run_verification

    report = run_verification()
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        for r in report.results:
            print(f"{r.id} {r.status} — {r.claim}")
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revfree",
        description="Construct, check, and search words avoiding reversed subwords.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, alphabet: bool = True) -> None:
        if alphabet:
            p.add_argument("-s", "--alphabet", type=int, required=True,
                           help="alphabet size (explicit, never inferred)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("check", help="validate one word against an avoidance query")
    p.add_argument("--word", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--squarefree", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("factors", help="length-n factor set of a word or periodic word")
    p.add_argument("--word")
    p.add_argument("--period")
    p.add_argument("--preamble")
    p.add_argument("-n", "--length", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("search", help="maximum length of valid words, as a JSON report")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--squarefree", action="store_true")
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--fix-first", action="store_true",
                   help="symmetry reduction: fix the first symbol to 0")
    add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("enumerate", help="all valid words of a given length")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--squarefree", action="store_true")
    p.add_argument("--length", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("morphic", help="morphism operations")
    msub = p.add_subparsers(dest="morphic_command", required=True)

    mp = msub.add_parser("apply", help="apply a morphism to a word")
    mp.add_argument("--morphism", required=True, metavar="FILE")
    mp.add_argument("--word", required=True)
    mp.set_defaults(func=cmd_morphic_apply)

    mp = msub.add_parser("stream", help="prefix of the morphic image of an infinite word")
    mp.add_argument("--morphism", required=True, metavar="FILE")
    mp.add_argument("--length", type=int, required=True)
    mp.add_argument("--inner-builtin", choices=("nonperiodic-binary", "thue-squarefree-ternary"))
    mp.add_argument("--inner-period")
    mp.add_argument("--inner-preamble")
    mp.set_defaults(func=cmd_morphic_stream)

    mp = msub.add_parser("factor-set", help="image factor set over a preimage universe")
    mp.add_argument("--morphism", required=True, metavar="FILE")
    mp.add_argument("-k", type=int, required=True)
    mp.add_argument("--universe-length", type=int, default=2)
    mp.add_argument("--squarefree-universe", action="store_true")
    mp.add_argument("--json", action="store_true")
    mp.set_defaults(func=cmd_morphic_factor_set)

    mp = msub.add_parser("marker", help="marker synchronization report")
    mp.add_argument("--morphism", required=True, metavar="FILE")
    mp.add_argument("--marker", required=True)
    mp.add_argument("--json", action="store_true")
    mp.set_defaults(func=cmd_morphic_marker)

    mp = msub.add_parser("squarefree-test", help="12-word squarefreeness test for ternary morphisms")
    mp.add_argument("--morphism", required=True, metavar="FILE")
    mp.add_argument("--json", action="store_true")
    mp.set_defaults(func=cmd_morphic_squarefree_test)

    p = sub.add_parser("match-periodic",
                       help="match a binary prefix against the periodic family for k=5")
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_match_periodic)

    p = sub.add_parser("verify-paper", help="re-run all eight claim verifications")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
