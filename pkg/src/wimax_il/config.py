"""Interleaver parameter sets, validation, and published reference constants.

A block is described by the triple (n_cbps, d, s): n_cbps coded bits per
OFDM symbol, d interleaver columns (12 or 16, 16 preferred as a power of
two), and the constellation-significance parameter s (1 for QPSK, 2 for
16-QAM, 3 for 64-QAM).
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .errors import DivisibilityError, RangeError

ALLOWED_D = (12, 16)
ALLOWED_S = (1, 2, 3)
DEFAULT_D = 16


class ModulationScheme(enum.Enum):
    QPSK = 1
    QAM16 = 2
    QAM64 = 3


def s_of(scheme: ModulationScheme) -> int:
    """Bits of constellation significance: 1, 2, 3 for QPSK/16-QAM/64-QAM."""
    return scheme.value


@dataclass(frozen=True)
class InterleaverConfig:
    """Validated (n_cbps, d, s) triple; immutable once constructed.

    Invariants enforced at construction:
      d in {12, 16}; s in {1, 2, 3}; n_cbps >= 2*d;
      d | n_cbps; s | (n_cbps / d).

    The last constraint keeps the mod-s significance groups aligned with
    the column structure; every standard configuration satisfies it.
    """

    n_cbps: int
    d: int
    s: int

    def __post_init__(self) -> None:
        n, d, s = self.n_cbps, self.d, self.s
        if d not in ALLOWED_D:
            raise RangeError(f"d must be one of {ALLOWED_D}, got {d}")
        if s not in ALLOWED_S:
            raise RangeError(f"s must be one of {ALLOWED_S}, got {s}")
        if n < 2 * d:
            raise RangeError(f"n_cbps must be at least 2*d = {2 * d}, got {n}")
        if n % d != 0:
            raise DivisibilityError(f"d = {d} does not divide n_cbps = {n}")
        if (n // d) % s != 0:
            raise DivisibilityError(
                f"s = {s} does not divide the row count n_cbps/d = {n // d}"
            )

    @property
    def rows(self) -> int:
        return self.n_cbps // self.d

    def as_text(self) -> str:
        """Plain-text triple "Ncbps,d,s"."""
        return f"{self.n_cbps},{self.d},{self.s}"

    def as_json(self) -> str:
        return json.dumps({"ncbps": self.n_cbps, "d": self.d, "s": self.s})


def validate_config(n_cbps: int, d: int, s: int) -> InterleaverConfig:
    """Return an immutable config iff every invariant holds.

    Raises RangeError for domain violations (d, s, n_cbps too small) and
    DivisibilityError when d does not divide n_cbps or s does not divide
    the row count.
    """
    return InterleaverConfig(n_cbps, d, s)


def parse_config_text(text: str) -> InterleaverConfig:
    """Parse the "Ncbps,d,s" triple form; round-trips with as_text()."""
    parts = text.strip().split(",")
    if len(parts) != 3:
        raise RangeError(f"expected 'Ncbps,d,s', got {text!r}")
    try:
        n, d, s = (int(p) for p in parts)
    except ValueError as exc:
        raise RangeError(f"non-integer field in {text!r}") from exc
    return validate_config(n, d, s)


def parse_config_json(text: str) -> InterleaverConfig:
    """Parse the {"ncbps":…, "d":…, "s":…} form; round-trips with as_json()."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RangeError(f"invalid JSON config: {exc}") from exc
    if not isinstance(obj, dict) or set(obj) != {"ncbps", "d", "s"}:
        raise RangeError("JSON config must have exactly the keys ncbps, d, s")
    return validate_config(obj["ncbps"], obj["d"], obj["s"])


# Default block sizes per modulation, d=16. The address math is generic in
# n_cbps; these are conveniences drawn from the 802.16 OFDM PHY family.
PRESETS: dict[str, InterleaverConfig] = {
    "qpsk": InterleaverConfig(192, DEFAULT_D, 1),
    "qam16": InterleaverConfig(384, DEFAULT_D, 2),
    "qam64": InterleaverConfig(576, DEFAULT_D, 3),
}


def preset(name: str) -> InterleaverConfig:
    try:
        return PRESETS[name.lower()]
    except KeyError:
        raise RangeError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")


@dataclass(frozen=True)
class PaperReference:
    """Published synthesis figures for the deinterleaver address generator
    this library models (Xilinx ISE, Spartan-3 XC3S400/PQ208, speed -5).

    These are reported constants, loaded once and never computed. The
    published flip-flop utilization of 0.153% is in tension with the
    published absolute count (16 of 7168 is about 0.223%); both values are
    kept exactly as printed rather than reconciled.
    """

    # area-optimized vs speed-optimized synthesis of the same circuit
    area_fmax_mhz: float = 107.41
    speed_fmax_mhz: float = 130.2
    power_mw: float = 56.0
    area_ff: int = 15
    speed_ff: int = 16
    area_lut: int = 116
    speed_lut: int = 120
    slices: int = 65

    # comparison table: speed-optimized design vs prior techniques
    comparison_fmax_mhz: float = 130.24
    comparison_slices_pct: float = 1.0
    comparison_ff_pct: float = 0.153
    comparison_lut_pct: float = 1.0
    upadhyaya_fmax_mhz: float = 121.82
    upadhyaya_slices_pct: float = 3.49
    upadhyaya_ff_pct: float = 0.50
    upadhyaya_lut_pct: float = 3.35
    lut_method_fmax_mhz: float = 62.51

    # reduction percentages as printed in the comparison table
    printed_slices_reduction_pct: float = -71.34
    printed_ff_reduction_pct: float = -69.4
    printed_lut_reduction_pct: float = -70.14
    printed_fmax_increase_pct: float = 6.9

    # device metadata only; no synthesis is performed here
    fpga_family: str = "Spartan 3"
    fpga_device: str = "XC3S400"
    fpga_package: str = "PQ208"
    fpga_speed_grade: str = "-5"
    toolchain: str = "Xilinx ISE"

    def as_dict(self) -> dict:
        return {
            "area_fmax_mhz": self.area_fmax_mhz,
            "speed_fmax_mhz": self.speed_fmax_mhz,
            "power_mw": self.power_mw,
            "area_ff": self.area_ff,
            "speed_ff": self.speed_ff,
            "area_lut": self.area_lut,
            "speed_lut": self.speed_lut,
            "slices": self.slices,
            "comparison_fmax_mhz": self.comparison_fmax_mhz,
            "comparison_slices_pct": self.comparison_slices_pct,
            "comparison_ff_pct": self.comparison_ff_pct,
            "comparison_lut_pct": self.comparison_lut_pct,
            "upadhyaya_fmax_mhz": self.upadhyaya_fmax_mhz,
            "upadhyaya_slices_pct": self.upadhyaya_slices_pct,
            "upadhyaya_ff_pct": self.upadhyaya_ff_pct,
            "upadhyaya_lut_pct": self.upadhyaya_lut_pct,
            "lut_method_fmax_mhz": self.lut_method_fmax_mhz,
            "printed_slices_reduction_pct": self.printed_slices_reduction_pct,
            "printed_ff_reduction_pct": self.printed_ff_reduction_pct,
            "printed_lut_reduction_pct": self.printed_lut_reduction_pct,
            "printed_fmax_increase_pct": self.printed_fmax_increase_pct,
            "fpga_family": self.fpga_family,
            "fpga_device": self.fpga_device,
            "fpga_package": self.fpga_package,
            "fpga_speed_grade": self.fpga_speed_grade,
            "toolchain": self.toolchain,
        }


PAPER_REFERENCE = PaperReference()
