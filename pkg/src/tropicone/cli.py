"""Command line front end.

Subcommands: graph, cone, check, oracle. Exit codes: 0 success, 1 bad
input, 2 unsupported index without --force, 3 internal assertion failure.
Identical invocations produce byte-identical output; files are written
atomically next to their final path.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import decograph, oracle, stringcone
from .decograph import GraphError, UnsupportedIndex, build_graph, to_dot, to_json
from .oracle import MixedSigns, NotTypeA
from .rootsystem import CartanType, RootSystemError, cartan_matrix, minuscule_indices
from .stringcone import dual_kostant_count, string_cone, weight_census
from .wordtools import LimitExceeded, WordError, enumerate_w0_words, parse_word

OUTDIR_ENV = "TROPICONE_OUTDIR"


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not os.path.isabs(path):
        path = os.path.join(outdir, path)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tropicone-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load(type_str: str, word_str: str):
    cd = cartan_matrix(CartanType.parse(type_str))
    return cd, parse_word(cd, word_str)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_graph(args) -> int:
    cd, w = _load(args.type, args.word)
    rule = "minuscule" if args.fast_path else "generic"
    if args.i is not None:
        g = build_graph(cd, w, args.i, force=args.force, rule=rule)
        text = to_dot(g) if args.format == "dot" else to_json(g)
    else:
        if args.format == "dot":
            print("error: --i is required with dot output", file=sys.stderr)
            return 1
        bundle = {
            "type": str(cd.ctype),
            "word": list(w.letters),
            "graphs": [
                decograph.to_json_dict(build_graph(cd, w, i, force=args.force, rule=rule))
                for i in range(1, cd.n + 1)
            ],
        }
        text = _json_text(bundle)
    _write_output(text, args.out)
    return 0


def cmd_cone(args) -> int:
    cd, w = _load(args.type, args.word)
    cone = string_cone(cd, w, force=args.force)
    _write_output(stringcone.render(cone, args.format), args.out)
    return 0


def cmd_check(args) -> int:
    cd, w = _load(args.type, args.word)
    indices = [args.i] if args.i is not None else list(range(1, cd.n + 1))
    reports = []
    for i in indices:
        g = build_graph(cd, w, i, force=args.force)
        reports.append({"i": i, "verify": decograph.verify_graph(g), "violations": g.violations})
    status = "pass" if all(
        r["verify"]["status"] == "pass" and not r["violations"] for r in reports
    ) else "fail"
    payload = {
        "input": {"type": str(cd.ctype), "word": list(w.letters)},
        "graphs": reports,
        "status": status,
    }
    _write_output(_json_text(payload), args.out)
    return 0 if status == "pass" else 1


def cmd_oracle(args) -> int:
    cd = cartan_matrix(CartanType.parse(args.type))
    if args.all_words:
        words = list(enumerate_w0_words(cd, limit=args.word_limit))
    elif args.word:
        words = [parse_word(cd, args.word)]
    else:
        print("error: oracle needs --word or --all-words", file=sys.stderr)
        return 1

    agreement = []
    if cd.ctype.family == "A":
        for w in words:
            for i in range(1, cd.n + 1):
                agreement.append(oracle.agreement_report(cd, w, i))

    census_failures = []
    census_checked = 0
    if len(words) <= 4:
        census_words = words
    else:
        census_words = [words[0], words[len(words) // 3], words[2 * len(words) // 3], words[-1]]
    bound = args.census_bound
    mvecs = [mv for mv in _mvecs(cd.n, bound)]
    for w in census_words:
        cone = string_cone(cd, w)
        for mv in mvecs:
            got = weight_census(cone, mv)
            want = dual_kostant_count(cd, mv)
            census_checked += 1
            if got != want:
                census_failures.append(
                    {"word": list(w.letters), "mvec": list(mv), "census": got, "kostant": want}
                )

    status = "pass" if (
        all(r["status"] == "pass" for r in agreement) and not census_failures
    ) else "fail"
    payload = {
        "input": {"type": str(cd.ctype), "words": len(words), "census_bound": bound},
        "agreement": agreement,
        "census_checked": census_checked,
        "census_failures": census_failures,
        "status": status,
    }
    _write_output(_json_text(payload), args.out)
    return 0 if status == "pass" else 1


def _mvecs(n: int, bound: int):
    """All nonnegative integer vectors of length n with sum <= bound."""

    def rec(prefix, left, budget):
        if left == 0:
            yield tuple(prefix)
            return
        for x in range(budget + 1):
            prefix.append(x)
            yield from rec(prefix, left - 1, budget - x)
            prefix.pop()

    yield from rec([], n, bound)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropicone",
        description="Monomial graphs and string cone inequality systems over reduced words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_word=True):
        p.add_argument("--type", required=True, help="Cartan type, e.g. C3")
        if need_word:
            p.add_argument("--word", required=True, help="comma-separated reduced word of w0")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--force", action="store_true", help="build even without a proven description")

    g = sub.add_parser("graph", help="build the monomial graph for one index")
    common(g)
    g.add_argument("--i", type=int, default=None, help="index; omit for a JSON bundle of all")
    g.add_argument("--format", choices=("dot", "json"), default="dot")
    g.add_argument("--fast-path", action="store_true", help="use the minuscule firing rule")
    g.set_defaults(func=cmd_graph)

    c = sub.add_parser("cone", help="emit the full inequality system")
    common(c)
    c.add_argument("--format", choices=("text", "json", "latex"), default="text")
    c.set_defaults(func=cmd_cone)

    k = sub.add_parser("check", help="run the invariant suite on a word")
    common(k)
    k.add_argument("--i", type=int, default=None, help="restrict to one index")
    k.set_defaults(func=cmd_check)

    o = sub.add_parser("oracle", help="brute-force agreement and census sweeps")
    o.add_argument("--type", required=True, help="Cartan type, e.g. A3")
    o.add_argument("--word", default=None, help="single word to sweep")
    o.add_argument("--all-words", action="store_true", help="sweep every reduced word")
    o.add_argument("--word-limit", type=int, default=100000)
    o.add_argument("--census-bound", type=int, default=2, help="max letter-sum for the census")
    o.add_argument("--out", default=None)
    o.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedIndex as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (GraphError, MixedSigns, AssertionError) as e:
        print(f"internal assertion failed: {e}", file=sys.stderr)
        return 3
    except (RootSystemError, WordError, NotTypeA, LimitExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
