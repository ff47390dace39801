"""Exact construction, classification and counting for (4,6)-fullerene graphs.

A (4,6)-fullerene is a plane cubic graph whose faces are six squares and h
hexagons.  The package builds the named families (cube, hexagonal prism,
tubes, lanterns, truncated octahedron), classifies the global structure,
counts k-matchings and seventeen small subgraph patterns by brute force, and
checks the closed-form counts with exact integer arithmetic.
"""

from .census import (
    PATTERN_NAMES,
    PATTERNS,
    CountLedger,
    Pattern,
    brute_force_oracle,
    count_matchings,
    count_pattern,
    matching_pattern,
    subset_shape_census,
)
from .formulas import (
    FormulaInput,
    legacy_pattern_formula,
    matching6_formula,
    matching_formula,
    pattern_formula,
    recurrence_residuals,
)
from .generators import (
    CUBE,
    HEXAGONAL_PRISM,
    LANTERN_A,
    LANTERN_B,
    TRUNCATED_OCTAHEDRON,
    GraphKind,
    generate,
    parse_graph,
    parse_kind,
    serialize_graph,
    tube_kind,
)
from .plane_graph import (
    EmbeddedGraph,
    FullereneProfile,
    GraphError,
    build_graph,
    validate_fullerene,
)
from .structure import (
    SixCycleKind,
    SquareAdjacencyProfile,
    StructureClass,
    StructureName,
    classify_six_cycle,
    classify_structure,
    detect_square_caps,
    dual_square_count,
    enumerate_six_cycles,
    six_cycle_census,
    six_cycle_count,
)
from .verify import (
    CorpusManifest,
    CorpusReport,
    GraphReport,
    ManifestEntry,
    VerifyOptions,
    default_manifest,
    parse_manifest,
    run_corpus,
    verify_graph,
)

__version__ = "1.0.0"

__all__ = [
    "PATTERN_NAMES",
    "PATTERNS",
    "CountLedger",
    "Pattern",
    "brute_force_oracle",
    "count_matchings",
    "count_pattern",
    "matching_pattern",
    "subset_shape_census",
    "FormulaInput",
    "legacy_pattern_formula",
    "matching6_formula",
    "matching_formula",
    "pattern_formula",
    "recurrence_residuals",
    "CUBE",
    "HEXAGONAL_PRISM",
    "LANTERN_A",
    "LANTERN_B",
    "TRUNCATED_OCTAHEDRON",
    "GraphKind",
    "generate",
    "parse_graph",
    "parse_kind",
    "serialize_graph",
    "tube_kind",
    "EmbeddedGraph",
    "FullereneProfile",
    "GraphError",
    "build_graph",
    "validate_fullerene",
    "SixCycleKind",
    "SquareAdjacencyProfile",
    "StructureClass",
    "StructureName",
    "classify_six_cycle",
    "classify_structure",
    "detect_square_caps",
    "dual_square_count",
    "enumerate_six_cycles",
    "six_cycle_census",
    "six_cycle_count",
    "CorpusManifest",
    "CorpusReport",
    "GraphReport",
    "ManifestEntry",
    "VerifyOptions",
    "default_manifest",
    "parse_manifest",
    "run_corpus",
    "verify_graph",
]
