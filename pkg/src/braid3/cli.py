"""Command-line entry point: ``braid3 <command> ...``.

Exit status: 0 on success, 1 on a negative verdict (non-conjugate words, a failed table
check), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import atlas
from .flype import BelowIndex3, FlypePair, UniqueClassWithinBound, classify
from .garside import conjugate_test, normal_form, to_word
from .invariants import InvariantError, fingerprint
from .words import BraidWordError, exponent_sum, parse_word, self_linking

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braid3", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def word_command(name, help_text, nwords=1):
        p = sub.add_parser(name, help=help_text)
        for i in range(nwords):
            p.add_argument(f"word{i + 1}" if nwords > 1 else "word",
                           help='braid word, e.g. "s1^3 s2^-1" or "1 1 1 -2"')
        p.add_argument("--strands", type=int, help="strand count (default: largest index + 1)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    word_command("normalize", "left normal form of a word")
    word_command("conjugate", "decide conjugacy of two words", nwords=2)
    p = word_command("classify", "classify a 3-braid")
    p.add_argument("--flype-bound", type=int, help="max |u|+|v|+|w| searched (default: word length + 8)")
    word_command("invariants", "Jones, Alexander, determinant and self-linking of the closure")

    p = sub.add_parser("atlas", help="enumerate transversally non-simple 3-braid pairs")
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--names", help='reference table CSV, or "bundled" for the shipped table')

    p = sub.add_parser("verify-table1", help="rebuild the c_b <= 12 atlas and check it against the table")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_normalize(args) -> int:
    w = parse_word(args.word, args.strands)
    nf = normal_form(w)
    if args.format == "json":
        _emit(json.dumps({
            "strands": nf.strands,
            "inf": nf.inf,
            "sup": nf.sup,
            "factors": [[x + 1 for x in f] for f in nf.factors],
            "word": str(to_word(nf)),
        }))
    else:
        _emit(str(nf))
    return EXIT_OK


def _cmd_conjugate(args) -> int:
    w1 = parse_word(args.word1, args.strands)
    w2 = parse_word(args.word2, args.strands)
    if args.strands is None and w1.strands != w2.strands:
        n = max(w1.strands, w2.strands)
        w1, w2 = parse_word(args.word1, n), parse_word(args.word2, n)
    verdict = conjugate_test(w1, w2)
    if args.format == "json":
        _emit(json.dumps({"conjugate": verdict}))
    else:
        _emit(f"conjugate: {'true' if verdict else 'false'}")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def _cmd_classify(args) -> int:
    w = parse_word(args.word, args.strands if args.strands is not None else 3)
    bound = args.flype_bound if args.flype_bound is not None else len(w) + 8
    if bound < 0:
        raise ValueError("--flype-bound must be non-negative")
    case = classify(w, bound)
    if args.format == "json":
        if isinstance(case, BelowIndex3):
            payload = {"case": 1, "k": case.k, "sign": case.sign}
        elif isinstance(case, FlypePair):
            payload = {"case": 3, "triple": str(case.triple), "partner": str(case.partner),
                       "transversally_nonsimple": case.transversally_nonsimple}
        else:
            assert isinstance(case, UniqueClassWithinBound)
            payload = {"case": 2, "bound": case.bound}
        _emit(json.dumps(payload))
    else:
        _emit(case.describe())
    return EXIT_OK


def _cmd_invariants(args) -> int:
    w = parse_word(args.word, args.strands)
    fp = fingerprint(w)
    data = {
        "strands": w.strands,
        "exponent_sum": exponent_sum(w),
        "self_linking": self_linking(w),
        **fp.to_dict(),
        "fingerprint_id": fp.id,
    }
    if args.format == "json":
        _emit(json.dumps(data))
    else:
        _emit("\n".join(f"{k}: {'-' if v is None else v}" for k, v in data.items()))
    return EXIT_OK


def _cmd_atlas(args) -> int:
    rows = atlas.build_atlas(args.max_crossings)
    if args.names:
        path = atlas.bundled_reference_path() if args.names == "bundled" else args.names
        rows = atlas.attach_names(rows, atlas.load_reference_table(path))
    if args.format in ("csv", "json"):
        sys.stdout.write(atlas.export(rows, args.format).decode())
        return EXIT_OK
    lines = [f"{'name':<8} {'beta':>4} {'cb':>3}  {'TK1':<12} {'TK2':<12} flags"]
    for r in rows:
        lines.append(f"{r.name or '-':<8} {r.beta:>4} {r.cb:>3}  {str(r.class1):<12} {str(r.class2):<12} "
                     f"{','.join(r.flags) or '-'}")
    lines.append(f"{len(rows)} rows")
    _emit("\n".join(lines))
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = atlas.verify_table1(atlas.build_atlas(12))
    if args.format == "json":
        _emit(json.dumps({
            "ok": report.ok,
            "rows": [{"name": c.name, "beta": c.beta, "cb": c.cb, "status": c.status, "detail": c.detail}
                     for c in report.checks],
        }, indent=2))
    else:
        _emit("\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


_COMMANDS = {
    "normalize": _cmd_normalize,
    "conjugate": _cmd_conjugate,
    "classify": _cmd_classify,
    "invariants": _cmd_invariants,
    "atlas": _cmd_atlas,
    "verify-table1": _cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (BraidWordError, InvariantError, ValueError, OSError) as exc:
        print(f"braid3: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
