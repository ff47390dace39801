"""Command line interface: generate, classify, count and verify.

Machine-readable output goes to stdout, diagnostics to stderr.  Exit codes:
0 success / PASS verdict, 1 FAIL verdict or graph error, 2 argument errors.
"""

from __future__ import annotations

import argparse
import sys

from . import structure, verify
from .census import PATTERNS
from .generators import generate, parse_graph, parse_kind, serialize_graph
from .plane_graph import EmbeddedGraph, GraphError

DEFAULT_MAX_TUBE = 40


class _CliError(Exception):
    """Argument-level problem; maps to exit code 2."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bnfullerene",
        description="Construct, classify and exactly count (4,6)-fullerene graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--generate", metavar="KIND[:T]",
                       help="named graph: cube, hexagonal-prism, tube:T, "
                            "lantern-a, lantern-b, truncated-octahedron")
        p.add_argument("--input", metavar="PATH", help="bnf-graph v1 file")
        p.add_argument("--max-tube", type=int, default=DEFAULT_MAX_TUBE,
                       help="largest accepted tube layer count (default %(default)s)")

    p_gen = sub.add_parser("generate", help="write a named graph as bnf-graph text")
    add_source(p_gen)
    p_gen.add_argument("--out", metavar="PATH", help="output file (default stdout)")

    p_cls = sub.add_parser("classify", help="print structure class and profile")
    add_source(p_cls)

    p_cnt = sub.add_parser("count", help="print one matching or pattern count")
    add_source(p_cnt)
    p_cnt.add_argument("--pattern", metavar="NAME", help="pattern letter, e.g. Q")
    p_cnt.add_argument("--k", type=int, metavar="K", help="matching order, 1..6")

    p_ver = sub.add_parser("verify", help="verify one graph or a corpus")
    add_source(p_ver)
    p_ver.add_argument("--corpus", metavar="PATH|default",
                       help="JSON manifest, or 'default' for the built-in corpus")
    p_ver.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p_ver.add_argument("--legacy-formulas", action="store_true",
                       help="use the superseded path(5) closed form (demonstrates FAIL)")
    p_ver.add_argument("--no-oracle", action="store_true",
                       help="skip the edge-subset oracle cross-check")
    p_ver.add_argument("--out", metavar="PATH", help="write the report here")
    return parser


def _load_graph(args: argparse.Namespace) -> tuple[EmbeddedGraph, str]:
    sources = [s for s in (args.generate, args.input) if s]
    if len(sources) != 1:
        raise _CliError("exactly one of --generate or --input is required")
    if args.generate:
        try:
            kind = parse_kind(args.generate)
        except ValueError as exc:
            raise _CliError(str(exc)) from None
        if kind.name == "tube" and kind.t > args.max_tube:
            raise _CliError(
                f"tube:{kind.t} exceeds --max-tube {args.max_tube}; raise the cap explicitly"
            )
        return generate(kind), kind.spec
    with open(args.input, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read()), args.input


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_generate(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args)
    _write(serialize_graph(g), args.out)
    return 0


_CLASS_DISPLAY = {
    "cube": "Cube",
    "hexagonal-prism": "HexagonalPrism",
    "tubular": "Tubular",
    "lantern": "Lantern",
    "dispersive": "Dispersive",
}


def _cmd_classify(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args)
    profile = structure.classify_structure(g)
    h = (g.n - 8) // 2
    parts = [_CLASS_DISPLAY[profile.name.value]]
    if profile.t is not None:
        parts.append(f"t={profile.t}")
    parts.append(f"h={h}")
    parts.append(f"y={profile.profile.y}")
    print(" ".join(parts))
    x0, x1, x2 = profile.profile.x
    print(f"x-profile: x0={x0} x1={x1} x2={x2}")
    kinds = structure.six_cycle_census(g)
    total = sum(kinds.values())
    detail = " ".join(f"{kind.value}={kinds[kind]}" for kind in structure.SixCycleKind)
    print(f"six-cycles: total={total} {detail}")
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    from . import census

    if (args.pattern is None) == (args.k is None):
        raise _CliError("exactly one of --pattern or --k is required")
    g, _ = _load_graph(args)
    if args.pattern is not None:
        if args.pattern not in PATTERNS:
            raise _CliError(f"unknown pattern {args.pattern!r}; choose from "
                            + " ".join(PATTERNS))
        value = census.count_pattern(g, PATTERNS[args.pattern])
    else:
        if args.k < 1:
            raise _CliError("--k must be at least 1")
        value = census.count_matchings(g, args.k)
    print(value)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    options = verify.VerifyOptions(
        oracle=False if args.no_oracle else None,
        legacy=args.legacy_formulas,
    )
    if args.corpus and (args.generate or args.input):
        raise _CliError("--corpus excludes --generate/--input")
    if args.corpus:
        if args.corpus == "default":
            manifest = verify.default_manifest(options)
        else:
            try:
                with open(args.corpus, "r", encoding="utf-8") as fh:
                    manifest = verify.parse_manifest(fh.read(), options)
            except OSError as exc:
                raise _CliError(f"cannot read manifest: {exc}") from None
    else:
        g, label = _load_graph(args)
        entry_kind = parse_kind(label) if args.generate else None
        if entry_kind is not None:
            manifest = verify.CorpusManifest(
                entries=(verify.ManifestEntry(kind=entry_kind),), options=options
            )
        else:
            manifest = verify.CorpusManifest(
                entries=(verify.ManifestEntry(file=args.input),), options=options
            )
    report = verify.run_corpus(manifest, workers=verify.worker_count())
    if args.format == "json":
        _write(report.to_json(), args.out)
    elif args.format == "csv":
        _write(report.to_csv(), args.out)
    else:
        lines = []
        for r in report.reports:
            lines.append(f"{r.graph}: {r.verdict}")
            for err in r.errors:
                lines.append(f"  error: {err}")
            for key, ok in sorted(r.matches.items()):
                if not ok:
                    lines.append(f"  mismatch: {key}")
        lines.append(f"corpus verdict: {report.verdict} "
                     f"({len(report.reports)} entries, {report.failure_count} failures)")
        _write("\n".join(lines) + "\n", args.out)
    print(f"verdict: {report.verdict}", file=sys.stderr)
    return 0 if report.verdict == "PASS" else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "generate": _cmd_generate,
        "classify": _cmd_classify,
        "count": _cmd_count,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except verify.ManifestError as exc:
        print(f"manifest error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GraphError as exc:
        print(f"graph error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
