"""Bit-exact WiMAX (IEEE 802.16e) channel interleaver toolkit.

Address math, a divider-free incremental address generator, burst-error
dispersal analysis, and a structural area-vs-speed datapath cost model,
with a CLI front end (wimax-il).
"""
from .burst import (
    BurstReport,
    ErrorMask,
    MaskDomain,
    SweepResult,
    burst_sweep,
    deinterleave_errors,
    inject_burst,
    max_run_length,
    min_pairwise_spacing,
)
from .config import (
    PAPER_REFERENCE,
    PRESETS,
    InterleaverConfig,
    ModulationScheme,
    PaperReference,
    parse_config_json,
    parse_config_text,
    preset,
    s_of,
    validate_config,
)
from .cost_model import (
    CostReport,
    DatapathGraph,
    NodeKind,
    TradeoffReport,
    Variant,
    build_datapath,
    compare_variants,
    estimate_cost,
    recompute_reduction_percentages,
    reduction_check,
)
from .errors import (
    CyclicGraph,
    DivisibilityError,
    DomainMismatch,
    Exhausted,
    IndexOutOfRange,
    InterleaverError,
    LengthMismatch,
    NotAPermutation,
    RangeError,
    TableFormatError,
)
from .generator import GeneratorState, OpCensus, init_state, run, step, step_op_trace
from .reference import (
    AddressTable,
    Direction,
    apply_permutation,
    build_table,
    deinterleave_index,
    interleave_index,
    invert_table,
)
from .tablefile import parse_table, read_table, serialize_table, write_table

__version__ = "0.1.0"
