"""Ground-truth index math for the two-step channel interleaver.

Interleave (transmit side), for k in [0, n_cbps):

    m_k = (n_cbps/d) * (k mod d) + floor(k/d)
    j_k = s*floor(m_k/s) + (m_k + n_cbps - floor(d*m_k/n_cbps)) mod s

Deinterleave (receive side), for j in [0, n_cbps):

    m_j = s*floor(j/s) + (j + floor(d*j/n_cbps)) mod s
    k_j = d*m_j - (n_cbps - 1) * floor(d*m_j/n_cbps)

The first step spreads adjacent coded bits onto non-adjacent subcarriers;
the second alternates them across constellation bit significances. All
arithmetic is exact integer arithmetic; this module is the oracle the
incremental generator is checked against.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .config import InterleaverConfig
from .errors import IndexOutOfRange, LengthMismatch, NotAPermutation


class Direction(str, enum.Enum):
    INTERLEAVE = "interleave"
    DEINTERLEAVE = "deinterleave"

    def flipped(self) -> "Direction":
        return (
            Direction.DEINTERLEAVE
            if self is Direction.INTERLEAVE
            else Direction.INTERLEAVE
        )


def interleave_index(cfg: InterleaverConfig, k: int) -> int:
    """Channel position j_k of coded bit k."""
    n, d, s = cfg.n_cbps, cfg.d, cfg.s
    if not 0 <= k < n:
        raise IndexOutOfRange(f"k = {k} outside [0, {n})")
    m = (n // d) * (k % d) + k // d
    return s * (m // s) + (m + n - (d * m) // n) % s


def deinterleave_index(cfg: InterleaverConfig, j: int) -> int:
    """Original position k_j of the bit received at channel position j."""
    n, d, s = cfg.n_cbps, cfg.d, cfg.s
    if not 0 <= j < n:
        raise IndexOutOfRange(f"j = {j} outside [0, {n})")
    m = s * (j // s) + (j + (d * j) // n) % s
    return d * m - (n - 1) * ((d * m) // n)


@dataclass(frozen=True)
class AddressTable:
    """A full permutation of [0, n_cbps): map[i] is the output index of
    input index i. Tables apply write-side (see apply_permutation)."""

    cfg: InterleaverConfig
    direction: Direction
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.cfg.n_cbps:
            raise LengthMismatch(
                f"table has {len(self.map)} rows, config needs {self.cfg.n_cbps}"
            )

    def is_permutation(self) -> bool:
        n = self.cfg.n_cbps
        seen = [False] * n
        for a in self.map:
            if not 0 <= a < n or seen[a]:
                return False
            seen[a] = True
        return True


def build_table(cfg: InterleaverConfig, direction: Direction) -> AddressTable:
    """Tabulate interleave_index or deinterleave_index over the whole block."""
    fn = (
        interleave_index
        if direction is Direction.INTERLEAVE
        else deinterleave_index
    )
    return AddressTable(cfg, direction, tuple(fn(cfg, i) for i in range(cfg.n_cbps)))


def invert_table(table: AddressTable) -> AddressTable:
    """Elementwise inverse: result.map[table.map[i]] = i; direction flipped."""
    if not table.is_permutation():
        raise NotAPermutation("cannot invert a corrupted address table")
    inv = [0] * len(table.map)
    for i, a in enumerate(table.map):
        inv[a] = i
    return AddressTable(table.cfg, table.direction.flipped(), tuple(inv))


def apply_permutation(table: AddressTable, bits: Sequence[int]) -> list[int]:
    """Permute a block: output[table.map[i]] = bits[i].

    Both directions apply write-side; the deinterleave map is the inverse
    permutation, so scattering through it is the same as gathering the
    interleaved block back through the interleave map. Deinterleaving an
    interleaved block therefore restores the original order.
    """
    if len(bits) != len(table.map):
        raise LengthMismatch(
            f"block of {len(bits)} bits against table of {len(table.map)}"
        )
    out = [0] * len(bits)
    for i, a in enumerate(table.map):
        out[a] = bits[i]
    return out
