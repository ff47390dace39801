"""Full verification of one graph or a corpus, with machine-readable reports.

A graph report carries, for every counted item, both the value obtained by
targeted enumeration and the closed-form prediction (plus the subset oracle
value when enabled), never just a boolean: disagreements must be auditable.
Timings live in a volatile section that deterministic comparisons exclude.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import census, formulas, structure
from .census import PATTERN_NAMES, PATTERNS, CountLedger
from .generators import GraphKind, generate, parse_graph, parse_kind, serialize_graph
from .plane_graph import EmbeddedGraph, GraphError, validate_fullerene

ORACLE_EDGE_LIMIT = 48

MATCHING_KS = (1, 2, 3, 4, 5, 6)


class ManifestError(ValueError):
    """The corpus manifest cannot be interpreted."""


@dataclass(frozen=True)
class VerifyOptions:
    matchings: tuple[int, ...] = MATCHING_KS
    patterns: tuple[str, ...] = PATTERN_NAMES
    oracle: bool | None = None  # None = on iff m <= ORACLE_EDGE_LIMIT
    legacy: bool = False

    def oracle_enabled(self, m: int) -> bool:
        if self.oracle is None:
            return m <= ORACLE_EDGE_LIMIT
        return self.oracle


@dataclass
class GraphReport:
    """Everything measured and predicted for one graph."""

    graph: str
    digest: str | None = None
    n: int | None = None
    m: int | None = None
    h: int | None = None
    class_name: str | None = None
    t: int | None = None
    y: int | None = None
    x_profile: tuple[int, int, int] | None = None
    six_cycles: dict = field(default_factory=dict)
    counts_brute: dict = field(default_factory=dict)
    counts_formula: dict = field(default_factory=dict)
    counts_oracle: dict | None = None
    matches: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)
    verdict: str = "FAIL"
    timings: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "digest": self.digest,
            "n": self.n,
            "m": self.m,
            "h": self.h,
            "class": self.class_name,
            "t": self.t,
            "y": self.y,
            "x_profile": list(self.x_profile) if self.x_profile else None,
            "six_cycles": self.six_cycles,
            "counts": {
                "brute": self.counts_brute,
                "formula": self.counts_formula,
                "oracle": self.counts_oracle,
            },
            "matches": self.matches,
            "residuals": self.residuals,
            "errors": self.errors,
            "verdict": self.verdict,
            "volatile": {"timings": self.timings},
        }


def _item_keys(options: VerifyOptions) -> list[str]:
    return [f"M{k}" for k in options.matchings] + list(options.patterns)


def verify_graph(
    g: EmbeddedGraph, options: VerifyOptions = VerifyOptions(), label: str = "graph"
) -> GraphReport:
    """Run the whole pipeline on one validated graph.

    Any module error is recorded in the report (verdict FAIL) instead of
    propagating, so corpus runs always continue.
    """
    report = GraphReport(graph=label)
    report.digest = hashlib.sha256(serialize_graph(g).encode()).hexdigest()[:16]
    phase_start = time.perf_counter()

    def tick(phase: str) -> None:
        nonlocal phase_start
        now = time.perf_counter()
        report.timings[phase] = round(now - phase_start, 6)
        phase_start = now

    try:
        profile = validate_fullerene(g)
        report.n, report.m, report.h = profile.n, profile.m, profile.h
        tick("validate")

        cls = structure.classify_structure(g)
        report.class_name = cls.name.value
        report.t = cls.t
        report.y = cls.profile.y
        report.x_profile = cls.profile.x
        tick("classify")

        kinds = structure.six_cycle_census(g)
        total = sum(kinds.values())
        expected_total = structure.six_cycle_count_formula(cls, profile.h, cls.profile.y)
        expected_kinds = _expected_kind_census(cls, profile.h)
        by_kind = {kind.value: kinds[kind] for kind in structure.SixCycleKind}
        report.six_cycles = {
            "total": total,
            "by_kind": by_kind,
            "formula": expected_total,
            "kinds_expected": expected_kinds,
        }
        report.matches["six_cycle_count"] = total == expected_total
        report.matches["six_cycle_kinds"] = by_kind == expected_kinds
        tick("six_cycles")

        for k in options.matchings:
            report.counts_brute[f"M{k}"] = census.count_matchings(g, k)
        for name in options.patterns:
            report.counts_brute[name] = census.count_pattern(g, PATTERNS[name])
        tick("census")

        if options.oracle_enabled(profile.m):
            report.counts_oracle = {}
            for k in options.matchings:
                report.counts_oracle[f"M{k}"] = census.brute_force_oracle(
                    g, census.matching_pattern(k)
                )
            for name in options.patterns:
                report.counts_oracle[name] = census.brute_force_oracle(g, PATTERNS[name])
            for key in _item_keys(options):
                report.matches[f"oracle:{key}"] = (
                    report.counts_brute[key] == report.counts_oracle[key]
                )
            tick("oracle")

        inp = formulas.FormulaInput(profile.h, cls.name.value, cls.profile.y)
        for k in options.matchings:
            if k <= 5:
                report.counts_formula[f"M{k}"] = formulas.matching_formula(k, profile.h)
            else:
                report.counts_formula[f"M{k}"] = formulas.matching6_formula(
                    cls.name.value, profile.h, cls.profile.y
                )
        for name in options.patterns:
            if name == "W":
                report.counts_formula[name] = None
            elif name == "P" and options.legacy:
                report.counts_formula[name] = formulas.legacy_pattern_formula(name, inp)
            else:
                report.counts_formula[name] = formulas.pattern_formula(name, inp)
        for key in _item_keys(options):
            predicted = report.counts_formula.get(key)
            if predicted is not None:
                report.matches[f"formula:{key}"] = report.counts_brute[key] == predicted
        tick("formulas")

        ledger = CountLedger(
            label=label,
            class_name=cls.name.value,
            matchings={k: report.counts_brute[f"M{k}"] for k in options.matchings},
            patterns={name: report.counts_brute[name] for name in options.patterns},
        )
        if set(options.matchings) >= {2, 3, 4, 5, 6} and set(options.patterns) >= set(
            "DEHIJKLOPQRSTU"
        ):
            report.residuals = formulas.recurrence_residuals(ledger, profile.m)
            report.matches["residuals"] = all(v == 0 for v in report.residuals.values())
        tick("recurrences")
    except ValueError as exc:  # GraphError and formula domain errors alike
        report.errors.append(f"{type(exc).__name__}: {exc}")

    report.verdict = (
        "PASS" if not report.errors and all(report.matches.values()) else "FAIL"
    )
    return report


def _expected_kind_census(cls: structure.StructureClass, h: int) -> dict[str, int]:
    k = structure.SixCycleKind
    if cls.name is structure.StructureName.CUBE:
        return {k.HEX_FACE.value: 0, k.DUAL_SQUARE.value: 12, k.SQUARE_CAP.value: 4,
                k.CAPPED_TUBE.value: 0}
    if cls.name is structure.StructureName.TUBULAR:
        return {k.HEX_FACE.value: 3 * cls.t, k.DUAL_SQUARE.value: 6,
                k.SQUARE_CAP.value: 2, k.CAPPED_TUBE.value: cls.t - 1}
    return {k.HEX_FACE.value: h, k.DUAL_SQUARE.value: cls.profile.y,
            k.SQUARE_CAP.value: 0, k.CAPPED_TUBE.value: 0}


@dataclass(frozen=True)
class ManifestEntry:
    """Either a generator kind or a path to a bnf-graph file."""

    kind: GraphKind | None = None
    file: str | None = None

    def __post_init__(self):
        if (self.kind is None) == (self.file is None):
            raise ManifestError("entry needs exactly one of generator kind or file")

    @property
    def label(self) -> str:
        return self.kind.spec if self.kind else self.file


@dataclass(frozen=True)
class CorpusManifest:
    entries: tuple[ManifestEntry, ...]
    options: VerifyOptions = VerifyOptions()

    def __post_init__(self):
        labels = [e.label for e in self.entries]
        if len(set(labels)) != len(labels):
            raise ManifestError("manifest entries must be distinct")


DEFAULT_KINDS = (
    "cube",
    "hexagonal-prism",
    "tube:1",
    "tube:2",
    "tube:3",
    "lantern-a",
    "lantern-b",
    "truncated-octahedron",
)


def default_manifest(options: VerifyOptions = VerifyOptions()) -> CorpusManifest:
    entries = tuple(ManifestEntry(kind=parse_kind(s)) for s in DEFAULT_KINDS)
    return CorpusManifest(entries=entries, options=options)


def parse_manifest(text: str, options: VerifyOptions | None = None) -> CorpusManifest:
    """Read a manifest from JSON.

    Schema: {"entries": [{"generate": "tube:1"} | {"file": "path"}, ...],
    "options": {"oracle": bool|null, "legacy": bool, "matchings": [...],
    "patterns": [...]}}.  Options given as an argument win over the file.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"manifest is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "entries" not in data:
        raise ManifestError("manifest must be an object with an 'entries' list")
    entries = []
    for i, raw in enumerate(data["entries"]):
        if isinstance(raw, str):
            raw = {"generate": raw}
        if not isinstance(raw, dict) or len(raw) != 1:
            raise ManifestError(f"entry {i} must be a generate/file object")
        key, value = next(iter(raw.items()))
        if key == "generate":
            try:
                entries.append(ManifestEntry(kind=parse_kind(value)))
            except ValueError as exc:
                raise ManifestError(f"entry {i}: {exc}") from None
        elif key == "file":
            entries.append(ManifestEntry(file=str(value)))
        else:
            raise ManifestError(f"entry {i}: unknown key {key!r}")
    if options is None:
        opts = data.get("options", {})
        if not isinstance(opts, dict):
            raise ManifestError("'options' must be an object")
        known = {"oracle", "legacy", "matchings", "patterns"}
        unknown = set(opts) - known
        if unknown:
            raise ManifestError(f"unknown options: {sorted(unknown)}")
        for name in opts.get("patterns", []):
            if name not in PATTERNS:
                raise ManifestError(f"unknown pattern {name!r} in options")
        for k in opts.get("matchings", []):
            if k not in MATCHING_KS:
                raise ManifestError(f"matching order {k!r} outside 1..6")
        options = VerifyOptions(
            matchings=tuple(opts.get("matchings", MATCHING_KS)),
            patterns=tuple(opts.get("patterns", PATTERN_NAMES)),
            oracle=opts.get("oracle"),
            legacy=bool(opts.get("legacy", False)),
        )
    return CorpusManifest(entries=tuple(entries), options=options)


@dataclass
class CorpusReport:
    reports: list[GraphReport]
    elapsed: float

    @property
    def verdict(self) -> str:
        return "PASS" if all(r.verdict == "PASS" for r in self.reports) else "FAIL"

    @property
    def failure_count(self) -> int:
        return sum(r.verdict != "PASS" for r in self.reports)

    def to_dict(self) -> dict:
        return {
            "entries": [r.to_dict() for r in self.reports],
            "verdict": self.verdict,
            "failures": self.failure_count,
            "volatile": {"elapsed": round(self.elapsed, 6)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def stable_json(self) -> str:
        """JSON with the volatile sections removed; byte-stable across runs."""
        data = self.to_dict()
        data.pop("volatile", None)
        for entry in data["entries"]:
            entry.pop("volatile", None)
        return json.dumps(data, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["graph", "item", "brute", "oracle", "formula", "match"])
        for r in self.reports:
            oracle = r.counts_oracle or {}
            for key in list(r.counts_brute):
                predicted = r.counts_formula.get(key)
                match = r.matches.get(f"formula:{key}")
                if match is None:
                    match = r.matches.get(f"oracle:{key}", "")
                writer.writerow(
                    [r.graph, key, r.counts_brute[key], oracle.get(key, ""),
                     "" if predicted is None else predicted, match]
                )
            if r.six_cycles:
                writer.writerow(
                    [r.graph, "six_cycles", r.six_cycles["total"], "",
                     r.six_cycles["formula"], r.matches.get("six_cycle_count", "")]
                )
            for name, value in r.residuals.items():
                writer.writerow([r.graph, f"residual:{name}", value, "", 0, value == 0])
            writer.writerow([r.graph, "verdict", r.verdict, "", "PASS", r.verdict == "PASS"])
        return buf.getvalue()


def _load_entry(entry: ManifestEntry) -> EmbeddedGraph:
    if entry.kind is not None:
        return generate(entry.kind)
    with open(entry.file, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _verify_entry(entry: ManifestEntry, options: VerifyOptions) -> GraphReport:
    try:
        g = _load_entry(entry)
    except (GraphError, OSError) as exc:
        report = GraphReport(graph=entry.label)
        report.errors.append(f"{type(exc).__name__}: {exc}")
        return report
    return verify_graph(g, options, label=entry.label)


def worker_count(env: str | None = None) -> int:
    """Resolve the worker count from BNF_THREADS (0 or unset = auto)."""
    raw = env if env is not None else os.environ.get("BNF_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        raise ManifestError(f"BNF_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise ManifestError("BNF_THREADS must be nonnegative")
    return value or min(4, os.cpu_count() or 1)


def run_corpus(manifest: CorpusManifest, workers: int | None = None) -> CorpusReport:
    """Verify every manifest entry; order and results are schedule-independent."""
    start = time.perf_counter()
    if workers is None:
        workers = worker_count()
    entries = list(manifest.entries)
    if not entries:
        return CorpusReport(reports=[], elapsed=time.perf_counter() - start)
    if workers > 1 and len(entries) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda e: _verify_entry(e, manifest.options), entries))
    else:
        reports = [_verify_entry(e, manifest.options) for e in entries]
    return CorpusReport(reports=reports, elapsed=time.perf_counter() - start)
