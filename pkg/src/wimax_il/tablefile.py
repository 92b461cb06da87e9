"""Canonical on-disk form of an address table.

Comment header (three fixed lines) followed by one "index,address" row per
bit, in index order:

    # wimax-il address table v1
    # ncbps=32 d=16 s=1
    # direction=deinterleave
    0,0
    1,16
    ...

The format is canonical: parsing a file and re-serializing it reproduces
the bytes exactly, and the same table always serializes to the same bytes
regardless of which engine produced it. Values are not range-checked at
parse time; verification (permutation and reference checks) is the
verify command's job.
"""
from __future__ import annotations

from .config import validate_config
from .errors import TableFormatError
from .reference import AddressTable, Direction

FORMAT_LINE = "# wimax-il address table v1"


def serialize_table(table: AddressTable) -> str:
    cfg = table.cfg
    lines = [
        FORMAT_LINE,
        f"# ncbps={cfg.n_cbps} d={cfg.d} s={cfg.s}",
        f"# direction={table.direction.value}",
    ]
    lines.extend(f"{i},{a}" for i, a in enumerate(table.map))
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> AddressTable:
    """Strict parse of the canonical form; raises TableFormatError on any
    deviation (wrong header, bad row count, out-of-order indices)."""
    lines = text.splitlines()
    if len(lines) < 4:
        raise TableFormatError("file too short to be an address table")
    if lines[0] != FORMAT_LINE:
        raise TableFormatError(f"unknown format line {lines[0]!r}")

    fields = {}
    for part in lines[1].removeprefix("# ").split():
        key, _, value = part.partition("=")
        fields[key] = value
    try:
        cfg = validate_config(
            int(fields["ncbps"]), int(fields["d"]), int(fields["s"])
        )
    except (KeyError, ValueError) as exc:
        raise TableFormatError(f"bad config header {lines[1]!r}") from exc

    prefix, _, dirname = lines[2].partition("=")
    if prefix != "# direction":
        raise TableFormatError(f"bad direction header {lines[2]!r}")
    try:
        direction = Direction(dirname)
    except ValueError as exc:
        raise TableFormatError(f"unknown direction {dirname!r}") from exc

    rows = lines[3:]
    if len(rows) != cfg.n_cbps:
        raise TableFormatError(
            f"expected {cfg.n_cbps} rows, found {len(rows)}"
        )
    addresses = []
    for lineno, row in enumerate(rows):
        left, sep, right = row.partition(",")
        try:
            index, address = int(left), int(right)
        except ValueError as exc:
            raise TableFormatError(f"bad row {row!r}") from exc
        if not sep or index != lineno:
            raise TableFormatError(
                f"row {lineno} out of order or malformed: {row!r}"
            )
        addresses.append(address)
    return AddressTable(cfg, direction, tuple(addresses))


def write_table(table: AddressTable, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_table(table))


def read_table(path: str) -> AddressTable:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_table(fh.read())
