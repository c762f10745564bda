"""Command-line driver: ``dejean-check {generate,matrix,factors,verify,analyze}``.

Exit codes: 0 pass, 1 violation or failed structural check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import reduction
from .index import WordIndex
from .verifier import (
    KERNEL_MODULUS,
    VerificationReport,
    VerifierConfig,
    build_test_word,
    scan,
)
from .words import (
    COVERS,
    F,
    DomainError,
    Word,
    fixed_point_prefix,
    format_word,
    frequency_matrix,
    inverse_mod,
    mat_mul,
    parse_word,
)

log = logging.getLogger("dejean_check")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    subcommand: str
    config: dict[str, Any]
    inputs: dict[str, str | None] = field(default_factory=dict)
    outputs: dict[str, str | None] = field(default_factory=dict)
    exit_status: int = EXIT_OK

    def to_dict(self) -> dict[str, Any]:
        return {
            "subcommand": self.subcommand,
            "config": self.config,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "exitStatus": self.exit_status,
        }


def read_word_file(path: str | Path) -> Word:
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise UsageError(f"{path}: empty word file")
    return parse_word(lines[0])


def resolve_cover(spec: str) -> tuple[str, Word]:
    if spec in COVERS:
        return spec, COVERS[spec]
    path = Path(spec)
    if path.is_file():
        return str(path), read_word_file(path)
    try:
        return spec, parse_word(spec)
    except DomainError:
        raise UsageError(f"--cover must be u0, u1, a word file or a digit word, got {spec!r}") from None


def dump(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_generate(args: argparse.Namespace) -> int:
    if args.length is not None and args.depth is not None:
        raise UsageError("--length and --depth are mutually exclusive")
    if args.length is not None:
        if args.cover is not None:
            raise UsageError("--cover only applies with --depth")
        if args.length < 0:
            raise UsageError("--length must be non-negative")
        word = fixed_point_prefix(F, args.seed, args.length)
    else:
        depth = 7 if args.depth is None else args.depth
        if depth < 0:
            raise UsageError("--depth must be non-negative")
        _, cover = resolve_cover(args.cover or "u1")
        word = build_test_word(F, cover, depth)
    write_output(format_word(word) + "\n", args.out)
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    M = frequency_matrix(F)
    inv = inverse_mod(M, args.mod)
    doc: dict[str, Any] = {"modulus": args.mod, "frequencyMatrix": [list(r) for r in M]}
    doc["inverse"] = None if inv is None else [list(r) for r in inv]
    if inv is not None:
        ident = [list(r) for r in mat_mul(M, inv, args.mod)]
        doc["verified"] = ident == [[int(i == j) for j in range(len(M))] for i in range(len(M))]
        doc["verified"] &= mat_mul(inv, M, args.mod) == mat_mul(M, inv, args.mod)
    if args.json:
        text = dump(doc)
    else:
        rows = ["frequency matrix:"] + ["  " + " ".join(map(str, r)) for r in M]
        if inv is None:
            rows.append(f"no inverse modulo {args.mod}")
        else:
            rows.append(f"inverse modulo {args.mod}:")
            rows += ["  " + " ".join(map(str, r)) for r in inv]
        text = "\n".join(rows) + "\n"
    write_output(text, args.out)
    return EXIT_OK if inv is not None else EXIT_FAIL


def cmd_factors(args: argparse.Namespace) -> int:
    if args.length < 0 or args.prefix < 0:
        raise UsageError("lengths must be non-negative")
    idx = WordIndex(fixed_point_prefix(F, args.seed, args.prefix))
    factors = sorted(format_word(t) for t in idx.distinct_factors(args.length))
    if args.json:
        text = dump({"prefix": args.prefix, "length": args.length, "count": len(factors), "factors": factors})
    else:
        text = "".join(f + "\n" for f in factors)
    write_output(text, args.out)
    return EXIT_OK


def _verify_target(args: argparse.Namespace) -> tuple[str, Word, Word | None, int]:
    """Test word to check, its name, the cover it should reduce to (if known), and its depth."""
    if args.word is not None:
        if args.cover is not None:
            raise UsageError("--word and --cover are mutually exclusive")
        depth = 7 if args.depth is None else args.depth
        return args.word, read_word_file(args.word), None, depth
    name, cover = resolve_cover(args.cover or "u1")
    depth = 7 if args.depth is None else args.depth
    if depth < 0:
        raise UsageError("--depth must be non-negative")
    return name, build_test_word(F, cover, depth), cover, depth


def _n_values(spec: str) -> list[int]:
    if spec == "all":
        return [30, 31, 32]
    try:
        n = int(spec)
    except ValueError:
        raise UsageError(f"--n must be an integer >= 30 or 'all', got {spec!r}") from None
    if n < 30:
        raise UsageError("--n must be at least 30")
    return [n]


def _summary(report: VerificationReport) -> str:
    counts = " ".join(f"{r}={report.count(r)}" for r in ("R1", "R2", "EQ1"))
    status = "PASS" if report.passed else "FAIL"
    return (
        f"{status} n={report.config.n} cover={report.config.cover_name} depth={report.config.depth} "
        f"length={report.text_length} kernel_windows={report.kernel_window_count} {counts}"
    )


def cmd_verify(args: argparse.Namespace) -> int:
    name, text, cover, depth = _verify_target(args)
    if args.qmax < 1:
        raise UsageError("--qmax must be positive")
    idx = WordIndex(text, KERNEL_MODULUS)
    reports = []
    for n in _n_values(args.n):
        log.debug("scanning %d letters for n=%d", len(text), n)
        cfg = VerifierConfig(
            n=n, q_max=args.qmax, cover=cover or (), depth=depth, cover_name=name, scan_eq1=not args.no_eq1
        )
        reports.append(scan(idx, cfg, args.threads))
    analysis = reduction.analyze(text, F, depth, cover)
    ok = all(r.passed for r in reports) and reduction.analysis_passed(analysis)
    status = EXIT_OK if ok else EXIT_FAIL

    if args.plot:
        from .plotting import plot_period_profile

        plot_period_profile(idx, reports[-1].config, args.plot)

    manifest = RunManifest(
        subcommand="verify",
        config={"n": args.n, "qMax": args.qmax, "cover": name, "depth": depth, "eq1Scan": not args.no_eq1},
        inputs={"word": args.word},
        outputs={"report": args.out, "plot": args.plot},
        exit_status=status,
    )
    if len(reports) == 1:
        doc = reports[0].to_dict()
    else:
        doc = {"runs": [r.to_dict() for r in reports]}
    doc["analysis"] = analysis
    doc["passed"] = ok
    doc["manifest"] = manifest.to_dict()

    if args.out:
        Path(args.out).write_text(dump(doc))
    if args.json:
        sys.stdout.write(dump(doc))
    else:
        for r in reports:
            print(_summary(r))
        checks = " ".join(f"{k}={v}" for k, v in analysis.items())
        print(f"{'PASS' if reduction.analysis_passed(analysis) else 'FAIL'} analysis {checks}")
    return status


def cmd_analyze(args: argparse.Namespace) -> int:
    if args.prefix is not None:
        if args.word is not None or args.cover is not None:
            raise UsageError("--prefix excludes --word and --cover")
        text = fixed_point_prefix(F, args.seed, args.prefix)
        analysis = reduction.analyze_fixed_point_prefix(text, F)
        name = f"prefix:{args.prefix}"
    else:
        name, text, cover, depth = _verify_target(args)
        analysis = reduction.analyze(text, F, depth, cover)
    ok = reduction.analysis_passed(analysis)
    doc = {"target": name, "textLength": len(text), "analysis": analysis, "passed": ok}
    if args.out:
        Path(args.out).write_text(dump(doc))
    if args.json:
        sys.stdout.write(dump(doc))
    else:
        checks = " ".join(f"{k}={v}" for k, v in analysis.items())
        print(f"{'PASS' if ok else 'FAIL'} {name} length={len(text)} {checks}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dejean-check", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a prefix of the fixed point, or f^depth of a cover")
    p.add_argument("--length", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--cover")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("matrix", help="frequency matrix of f and its inverse mod --mod")
    p.add_argument("--mod", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("factors", help="distinct factors of a prefix of the fixed point")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--prefix", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_factors)

    for cmd, func, helptext in (
        ("verify", cmd_verify, "scan f^depth(cover) for kernel repetitions and run structural checks"),
        ("analyze", cmd_analyze, "structural checks only"),
    ):
        p = sub.add_parser(cmd, help=helptext)
        p.add_argument("--cover", help="u0, u1, a word file, or a literal digit word (default u1)")
        p.add_argument("--word", help="check this word file directly; it must be f-aligned at position 0")
        p.add_argument("--depth", type=int)
        p.add_argument("--out")
        p.add_argument("--json", action="store_true")
        if cmd == "verify":
            p.add_argument("--n", default="32", help="30, 31, 32, ... or 'all' for 30..32")
            p.add_argument("--qmax", type=int, default=1966)
            p.add_argument("--no-eq1", action="store_true", help="skip periods above --qmax")
            p.add_argument("--threads", type=int, default=None)
            p.add_argument("--plot", help="also write a period-profile figure to this path")
        else:
            p.add_argument("--prefix", type=int, help="analyze a prefix of the fixed point instead")
            p.add_argument("--seed", type=int, default=1)
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"dejean-check {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
