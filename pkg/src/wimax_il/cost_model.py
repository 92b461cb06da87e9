"""Structural area-vs-speed estimator for the address-generator datapath.

Two datapath variants of the counter scheme in generator.py are modeled:

  area   one shared add/subtract unit, time-multiplexed round-robin over
         the three wide updates (the d*j remainder pair, the corrected
         residue u, and the output address), at the price of operand mux
         trees and a longer combinational chain;
  speed  dedicated adders per accumulator and a pipeline register between
         the correction stage and the output-address stage: one extra
         register, shorter critical path.

The published circuit was optimized with synthesis directives, not a
published micro-architecture, so both constructions here are modeling
choices; every report labels them as structural estimates and carries the
published synthesis figures separately. Absolute LUT counts are not
claimed to match the published ones; only the orderings (speed uses one
more register, area has the longer critical path) are asserted.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .config import PAPER_REFERENCE, InterleaverConfig, PaperReference
from .errors import CyclicGraph, RangeError

# LUT-equivalent weights per bit of datapath width; declared arbitrary.
# Add/subtract units and comparators cost one LUT per bit, a 2:1 mux half,
# registers and constants nothing. Width is ceil(log2(n_cbps * d)), wide
# enough for every intermediate value.
LUT_PER_BIT = {"adder": 1.0, "subtractor": 1.0, "comparator": 1.0, "mux": 0.5}

DEFAULT_UNIT_DELAY_NS = 1.0


class NodeKind(str, enum.Enum):
    REGISTER = "register"
    ADDER = "adder"
    SUBTRACTOR = "subtractor"
    COMPARATOR = "comparator"
    MUX = "mux"
    CONSTANT = "constant"


_COMBINATIONAL = {
    NodeKind.ADDER,
    NodeKind.SUBTRACTOR,
    NodeKind.COMPARATOR,
    NodeKind.MUX,
}


class Variant(str, enum.Enum):
    AREA = "area"
    SPEED = "speed"


@dataclass(frozen=True)
class Node:
    name: str
    kind: NodeKind
    stage: int = 0


@dataclass
class DatapathGraph:
    """Directed primitive-level structure: nodes plus data-dependency edges.

    Register inputs name the combinational node producing their next
    value; cycles are legal only through registers.
    """

    variant: str
    width_bits: int
    nodes: dict[str, Node] = field(default_factory=dict)
    preds: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def add(self, name: str, kind: NodeKind, *inputs: str, stage: int = 0) -> None:
        if name in self.nodes:
            raise RangeError(f"duplicate node {name!r}")
        self.nodes[name] = Node(name, kind, stage)
        self.preds[name] = tuple(inputs)

    def stage_of(self, name: str) -> int:
        return self.nodes[name].stage

    def validate(self) -> None:
        for name, inputs in self.preds.items():
            node = self.nodes[name]
            for src in inputs:
                if src not in self.nodes:
                    raise RangeError(f"node {name!r} reads undefined {src!r}")
            if node.kind in _COMBINATIONAL and not inputs:
                raise RangeError(f"combinational node {name!r} has no inputs")
        self._combinational_depths()  # raises CyclicGraph on a loop

    def _combinational_depths(self) -> dict[str, int]:
        """Longest combinational chain ending at each node; registers and
        constants contribute depth 0."""
        depths: dict[str, int] = {}
        in_progress: set[str] = set()

        def depth(name: str) -> int:
            node = self.nodes[name]
            if node.kind not in _COMBINATIONAL:
                return 0
            if name in depths:
                return depths[name]
            if name in in_progress:
                raise CyclicGraph(f"combinational loop through {name!r}")
            in_progress.add(name)
            best = 0
            for src in self.preds[name]:
                best = max(best, depth(src))
            in_progress.discard(name)
            depths[name] = best + 1
            return depths[name]

        for name in self.nodes:
            depth(name)
        return depths


@dataclass(frozen=True)
class CostReport:
    """Structural resource/timing estimate; not a synthesis result."""

    variant: str
    register_count: int
    adder_count: int  # add and subtract units together
    comparator_count: int
    mux_count: int
    lut_equiv: float
    critical_path_depth: int
    fmax_proxy_mhz: float

    def as_dict(self) -> dict:
        return {
            "variant": self.variant,
            "register_count": self.register_count,
            "adder_count": self.adder_count,
            "comparator_count": self.comparator_count,
            "mux_count": self.mux_count,
            "lut_equiv": self.lut_equiv,
            "critical_path_depth": self.critical_path_depth,
            "fmax_proxy_mhz": self.fmax_proxy_mhz,
        }


def width_bits(cfg: InterleaverConfig) -> int:
    """ceil(log2(n_cbps * d)): enough bits for every accumulator value."""
    return (cfg.n_cbps * cfg.d - 1).bit_length()


def _common_counters(g: DatapathGraph) -> None:
    """Registers, constants, and the narrow dedicated counters shared by
    both variants (q-mod-s trackers and the j-mod-s pair)."""
    for reg in ("r", "q", "v", "dv", "dv_lo", "tv", "s_phase", "s_base", "addr_out"):
        g.add(reg, NodeKind.REGISTER)
    for const in ("const_d", "const_one", "const_s", "const_neg_sd", "const_n", "const_zero"):
        g.add(const, NodeKind.CONSTANT)

    # v = q mod s and its derived correction registers, reset on wrap
    g.add("add_v", NodeKind.ADDER, "v", "const_one")
    g.add("cmp_v", NodeKind.COMPARATOR, "add_v", "const_s")
    g.add("mux_v", NodeKind.MUX, "add_v", "const_zero", "cmp_v")
    g.add("add_dv", NodeKind.ADDER, "dv", "const_d")
    g.add("mux_dv", NodeKind.MUX, "add_dv", "const_zero", "cmp_v")
    g.add("add_dvlo", NodeKind.ADDER, "dv_lo", "const_d")
    g.add("mux_dvlo", NodeKind.MUX, "add_dvlo", "const_neg_sd", "cmp_v")
    g.add("sub_tv", NodeKind.SUBTRACTOR, "tv", "const_one")
    g.add("mux_tv", NodeKind.MUX, "sub_tv", "const_s", "cmp_v")

    # s_phase / s_base pair
    g.add("add_sphase", NodeKind.ADDER, "s_phase", "const_one")
    g.add("cmp_sphase", NodeKind.COMPARATOR, "add_sphase", "const_s")
    g.add("mux_sphase", NodeKind.MUX, "add_sphase", "const_zero", "cmp_sphase")
    g.add("add_sbase", NodeKind.ADDER, "s_base", "const_s")
    g.add("mux_sbase", NodeKind.MUX, "s_base", "add_sbase", "cmp_sphase")


def build_datapath(cfg: InterleaverConfig, variant: Variant | str) -> DatapathGraph:
    """Construct the structural graph for one optimization goal.

    Node count does not depend on cfg; only datapath width (and so the
    LUT-equivalent estimate) grows with log2(n_cbps * d).
    """
    variant = Variant(variant)
    g = DatapathGraph(variant=variant.value, width_bits=width_bits(cfg))
    _common_counters(g)

    if variant is Variant.SPEED:
        # dedicated wide units; pipeline register after the corrected residue
        g.add("cmp_de", NodeKind.COMPARATOR, "s_phase", "tv")
        g.add("mux_de", NodeKind.MUX, "dv", "dv_lo", "cmp_de")
        g.add("add_u", NodeKind.ADDER, "r", "mux_de")
        g.add("pipe_u", NodeKind.REGISTER, "add_u", stage=1)
        g.add("add_k", NodeKind.ADDER, "pipe_u", "q", stage=1)

        g.add("add_r", NodeKind.ADDER, "r", "const_d")
        g.add("sub_r", NodeKind.SUBTRACTOR, "add_r", "const_n")
        g.add("cmp_r", NodeKind.COMPARATOR, "add_r", "const_n")
        g.add("mux_r", NodeKind.MUX, "add_r", "sub_r", "cmp_r")
        g.add("add_q", NodeKind.ADDER, "q", "const_one")
        g.add("mux_q", NodeKind.MUX, "q", "add_q", "cmp_r")
        _wire_registers(
            g,
            r="mux_r",
            q="mux_q",
            addr_out="add_k",
        )
    else:
        # one shared ALU behind operand mux trees; round-robin over the
        # r-update, the u computation, and the output address
        g.add("mux_de", NodeKind.MUX, "dv", "dv_lo")
        g.add("mux_a1", NodeKind.MUX, "r", "q")
        g.add("mux_a2", NodeKind.MUX, "mux_a1", "s_base")
        g.add("mux_b1", NodeKind.MUX, "mux_de", "const_d")
        g.add("mux_b2", NodeKind.MUX, "mux_b1", "const_n")
        g.add("alu", NodeKind.ADDER, "mux_a2", "mux_b2")
        g.add("mux_thr", NodeKind.MUX, "const_n", "const_s")
        g.add("cmp_shared", NodeKind.COMPARATOR, "alu", "mux_thr")
        g.add("mux_wr", NodeKind.MUX, "alu", "const_zero", "cmp_shared")
        g.add("add_q", NodeKind.ADDER, "q", "const_one")
        g.add("mux_q", NodeKind.MUX, "q", "add_q", "cmp_shared")
        _wire_registers(
            g,
            r="mux_wr",
            q="mux_q",
            addr_out="mux_wr",
        )

    g.validate()
    return g


def _wire_registers(g: DatapathGraph, *, r: str, q: str, addr_out: str) -> None:
    updates = {
        "r": r,
        "q": q,
        "v": "mux_v",
        "dv": "mux_dv",
        "dv_lo": "mux_dvlo",
        "tv": "mux_tv",
        "s_phase": "mux_sphase",
        "s_base": "mux_sbase",
        "addr_out": addr_out,
    }
    for reg, src in updates.items():
        g.preds[reg] = (src,)


def estimate_cost(
    g: DatapathGraph, unit_delay_ns: float = DEFAULT_UNIT_DELAY_NS
) -> CostReport:
    """Count primitives and the longest register-to-register chain.

    Pure function of the graph: the same graph always yields the same
    report. Raises CyclicGraph when combinational nodes form a loop.
    """
    if unit_delay_ns <= 0:
        raise RangeError(f"unit delay must be positive, got {unit_delay_ns}")
    g.validate()
    depths = g._combinational_depths()
    counts = {kind: 0 for kind in NodeKind}
    for node in g.nodes.values():
        counts[node.kind] += 1

    w = g.width_bits
    lut = sum(
        LUT_PER_BIT[node.kind.value] * w
        for node in g.nodes.values()
        if node.kind in _COMBINATIONAL
    )
    depth = max(depths.values(), default=0)
    return CostReport(
        variant=g.variant,
        register_count=counts[NodeKind.REGISTER],
        adder_count=counts[NodeKind.ADDER] + counts[NodeKind.SUBTRACTOR],
        comparator_count=counts[NodeKind.COMPARATOR],
        mux_count=counts[NodeKind.MUX],
        lut_equiv=lut,
        critical_path_depth=depth,
        fmax_proxy_mhz=1000.0 / (depth * unit_delay_ns) if depth else float("inf"),
    )


@dataclass(frozen=True)
class TradeoffReport:
    cfg: InterleaverConfig
    area: CostReport
    speed: CostReport
    paper: PaperReference
    deltas: dict
    unit_delay_ns: float

    def as_dict(self) -> dict:
        return {
            "config": {"ncbps": self.cfg.n_cbps, "d": self.cfg.d, "s": self.cfg.s},
            "model": {
                "note": (
                    "structural estimates from the datapath model; "
                    "not synthesis results"
                ),
                "unit_delay_ns": self.unit_delay_ns,
                "area": self.area.as_dict(),
                "speed": self.speed.as_dict(),
                "deltas": self.deltas,
            },
            "paper_reference": {
                "note": "published synthesis results, carried verbatim",
                **self.paper.as_dict(),
            },
        }

    def render_text(self) -> str:
        a, s, p = self.area, self.speed, self.paper
        lines = [
            f"trade-off report for ncbps={self.cfg.n_cbps} d={self.cfg.d} s={self.cfg.s}",
            "",
            f"model: structural estimates (unit delay {self.unit_delay_ns} ns), not synthesis results",
            f"  {'metric':<28}{'area':>10}{'speed':>10}",
            f"  {'registers':<28}{a.register_count:>10}{s.register_count:>10}",
            f"  {'adders/subtractors':<28}{a.adder_count:>10}{s.adder_count:>10}",
            f"  {'comparators':<28}{a.comparator_count:>10}{s.comparator_count:>10}",
            f"  {'muxes':<28}{a.mux_count:>10}{s.mux_count:>10}",
            f"  {'LUT-equivalent':<28}{a.lut_equiv:>10.1f}{s.lut_equiv:>10.1f}",
            f"  {'critical path depth':<28}{a.critical_path_depth:>10}{s.critical_path_depth:>10}",
            f"  {'fmax proxy (MHz)':<28}{a.fmax_proxy_mhz:>10.2f}{s.fmax_proxy_mhz:>10.2f}",
            "  deltas (speed vs area): "
            + f"fmax {self.deltas['fmax_proxy_pct']:+.1f}%, "
            + f"lut {self.deltas['lut_equiv_pct']:+.1f}%, "
            + f"registers {self.deltas['register_count_delta']:+d}, "
            + f"depth {self.deltas['critical_path_depth_delta']:+d}",
            "",
            "paper_reference: published synthesis results (Spartan-3 XC3S400, PQ208)",
            f"  {'metric':<28}{'area':>10}{'speed':>10}",
            f"  {'max frequency (MHz)':<28}{p.area_fmax_mhz:>10}{p.speed_fmax_mhz:>10}",
            f"  {'power (mW)':<28}{p.power_mw:>10}{p.power_mw:>10}",
            f"  {'slice flip-flops':<28}{p.area_ff:>10}{p.speed_ff:>10}",
            f"  {'4-input LUTs':<28}{p.area_lut:>10}{p.speed_lut:>10}",
            f"  {'slices':<28}{p.slices:>10}{p.slices:>10}",
        ]
        return "\n".join(lines)


def compare_variants(
    cfg: InterleaverConfig, unit_delay_ns: float = DEFAULT_UNIT_DELAY_NS
) -> TradeoffReport:
    """Build and estimate both variants; attach published figures side by
    side. All deltas are computed from the two estimates, never entered by
    hand."""
    area = estimate_cost(build_datapath(cfg, Variant.AREA), unit_delay_ns)
    speed = estimate_cost(build_datapath(cfg, Variant.SPEED), unit_delay_ns)
    deltas = {
        "fmax_proxy_pct": 100.0 * (speed.fmax_proxy_mhz - area.fmax_proxy_mhz)
        / area.fmax_proxy_mhz,
        "lut_equiv_pct": 100.0 * (speed.lut_equiv - area.lut_equiv) / area.lut_equiv,
        "register_count_delta": speed.register_count - area.register_count,
        "critical_path_depth_delta": speed.critical_path_depth
        - area.critical_path_depth,
    }
    return TradeoffReport(
        cfg=cfg,
        area=area,
        speed=speed,
        paper=PAPER_REFERENCE,
        deltas=deltas,
        unit_delay_ns=unit_delay_ns,
    )


def recompute_reduction_percentages(ref: PaperReference = PAPER_REFERENCE) -> dict:
    """Recompute the published comparison percentages, 100*(ours-theirs)/theirs,
    from the comparison table's own input columns."""
    return {
        "slices_pct": 100.0
        * (ref.comparison_slices_pct - ref.upadhyaya_slices_pct)
        / ref.upadhyaya_slices_pct,
        "ff_pct": 100.0
        * (ref.comparison_ff_pct - ref.upadhyaya_ff_pct)
        / ref.upadhyaya_ff_pct,
        "lut_pct": 100.0
        * (ref.comparison_lut_pct - ref.upadhyaya_lut_pct)
        / ref.upadhyaya_lut_pct,
        "fmax_pct": 100.0
        * (ref.comparison_fmax_mhz - ref.upadhyaya_fmax_mhz)
        / ref.upadhyaya_fmax_mhz,
    }


def reduction_check(
    ref: PaperReference = PAPER_REFERENCE, tol: float = 0.1
) -> list[tuple[str, float, float, bool]]:
    """Each row: (name, recomputed, printed, within tolerance)."""
    recomputed = recompute_reduction_percentages(ref)
    printed = {
        "slices_pct": ref.printed_slices_reduction_pct,
        "ff_pct": ref.printed_ff_reduction_pct,
        "lut_pct": ref.printed_lut_reduction_pct,
        "fmax_pct": ref.printed_fmax_increase_pct,
    }
    return [
        (name, recomputed[name], printed[name], abs(recomputed[name] - printed[name]) <= tol)
        for name in ("slices_pct", "ff_pct", "lut_pct", "fmax_pct")
    ]
