"""Circuit splicing, shot simulation, and billing analysis."""

from ._core import (
    Circuit,
    CircuitParseError,
    CountsTable,
    GateCensus,
    SpliceMap,
    benchmark_names,
    bill,
    build_benchmark,
    build_preset_mix,
    build_reset_test,
    catalog_models,
    detect,
    normalize,
    parse,
    parse_file,
    preset_mix_names,
    reset_fidelity,
    reset_residual,
    run,
    serialize,
    splice,
    split_counts,
    tvd,
    validate,
)

__all__ = [
    "Circuit",
    "CircuitParseError",
    "CountsTable",
    "GateCensus",
    "SpliceMap",
    "benchmark_names",
    "bill",
    "build_benchmark",
    "build_preset_mix",
    "build_reset_test",
    "catalog_models",
    "detect",
    "normalize",
    "parse",
    "parse_file",
    "preset_mix_names",
    "reset_fidelity",
    "reset_residual",
    "run",
    "serialize",
    "splice",
    "split_counts",
    "tvd",
    "validate",
]
