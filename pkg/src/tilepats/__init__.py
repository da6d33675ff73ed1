"""Patterned tile self-assembly: simulation, the Subset Sum circuit reduction,
and exact minimum tile set synthesis for small patterns."""

from .assembler import (
    AssemblyOutcome,
    GlueTrace,
    Verdict,
    assemble,
    column_glue_trace,
    row_glue_trace,
    verify_solves,
)
from .reduction import (
    T26,
    SubsetSumInstance,
    build_circuit_pattern,
    build_seed,
    build_tileset_t26,
    circuit_height,
    display_height,
    evaluate_choice,
    solve_ss_by_assembly,
    splice,
    subset_sum_dp,
)
from .solver import Certificate, brute_force_min, closure, minimize_tileset, verify_certificate
from .tiles import (
    Assembly,
    Pattern,
    SeedGlues,
    TileSet,
    TileType,
    canonicalize,
    check_uniqueness,
    lookup_tile,
    tilesets_isomorphic,
)

__version__ = "0.1.0"
