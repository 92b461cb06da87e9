"""Command-line front end: gen, verify, burst, tradeoff.

Exit codes: 0 success, 1 verification failure, 2 usage/config error.
Verification commands never exit 0 when any check fails.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import burst as burst_mod
from . import generator
from .config import PRESETS, InterleaverConfig, preset, validate_config
from .cost_model import (
    DEFAULT_UNIT_DELAY_NS,
    compare_variants,
    reduction_check,
)
from .errors import InterleaverError, RangeError, TableFormatError
from .reference import AddressTable, Direction, build_table, invert_table
from .tablefile import read_table, serialize_table

UNIT_DELAY_ENV = "WIMAX_IL_UNIT_DELAY_NS"

BURST_FORMAT_LINE = "# wimax-il burst report v1"


@dataclass
class CommandOutcome:
    exit_code: int
    summary: str
    artifacts: tuple[str, ...] = field(default=())


def _engine_table(
    cfg: InterleaverConfig, direction: Direction, engine: str
) -> AddressTable:
    if engine == "reference":
        return build_table(cfg, direction)
    table = generator.run(cfg)
    if direction is Direction.INTERLEAVE:
        table = invert_table(table)
    return table


def cmd_gen(
    cfg: InterleaverConfig,
    direction: Direction,
    engine: str,
    out: str | None,
) -> CommandOutcome:
    table = _engine_table(cfg, direction, engine)
    text = serialize_table(table)
    if out is None:
        return CommandOutcome(0, text.rstrip("\n"))
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return CommandOutcome(
        0,
        f"wrote {cfg.n_cbps}-row {direction.value} table ({engine} engine) to {out}",
        (out,),
    )


def _verify_config(cfg: InterleaverConfig) -> tuple[str, bool]:
    """One row of the verification matrix."""
    itab = build_table(cfg, Direction.INTERLEAVE)
    dtab = build_table(cfg, Direction.DEINTERLEAVE)
    bijective = itab.is_permutation() and dtab.is_permutation()
    inverse_ok = sum(1 for k in range(cfg.n_cbps) if dtab.map[itab.map[k]] == k)
    incremental_ok = generator.run(cfg).map == dtab.map
    invert_ok = invert_table(itab).map == dtab.map
    ok = (
        bijective
        and inverse_ok == cfg.n_cbps
        and incremental_ok
        and invert_ok
    )
    row = (
        f"{cfg.as_text():<12} "
        f"bijective={'ok' if bijective else 'FAIL':<5} "
        f"inverse={inverse_ok}/{cfg.n_cbps} "
        f"incremental={'ok' if incremental_ok else 'FAIL':<5} "
        f"invert={'ok' if invert_ok else 'FAIL':<5} "
        f"{'PASS' if ok else 'FAIL'}"
    )
    return row, ok


def cmd_verify(
    cfgs: list[InterleaverConfig] | None = None,
    table_path: str | None = None,
) -> CommandOutcome:
    if table_path is not None:
        try:
            table = read_table(table_path)
        except (TableFormatError, OSError) as exc:
            return CommandOutcome(1, f"FAIL {table_path}: {exc}")
        checks = []
        perm_ok = table.is_permutation()
        checks.append(("permutation", perm_ok))
        if perm_ok:
            expected = build_table(table.cfg, table.direction)
            checks.append(("matches reference", table.map == expected.map))
        lines = [f"{name}: {'ok' if ok else 'FAIL'}" for name, ok in checks]
        all_ok = all(ok for _, ok in checks)
        verdict = "PASS" if all_ok else "FAIL"
        summary = "\n".join(lines + [f"{verdict} {table_path}"])
        return CommandOutcome(0 if all_ok else 1, summary)

    assert cfgs
    rows, oks = [], []
    for cfg in cfgs:
        row, ok = _verify_config(cfg)
        rows.append(row)
        oks.append(ok)
    verdict = "PASS" if all(oks) else "FAIL"
    rows.append(f"{verdict}: {sum(oks)}/{len(oks)} configs clean")
    return CommandOutcome(0 if all(oks) else 1, "\n".join(rows))


def _burst_csv(cfg: InterleaverConfig, sweeps: list[burst_mod.SweepResult]) -> str:
    lines = [
        BURST_FORMAT_LINE,
        f"# ncbps={cfg.n_cbps} d={cfg.d} s={cfg.s}",
        "# columns: start,b,max_run,min_spacing,rs_correctable",
        f"# note: {burst_mod.RS_CRITERION_NOTE}",
    ]
    for sweep in sweeps:
        lines.extend(",".join(str(x) for x in r.as_row()) for r in sweep.reports)
    return "\n".join(lines) + "\n"


def _burst_json(cfg: InterleaverConfig, sweeps: list[burst_mod.SweepResult]) -> str:
    payload = {
        "config": {"ncbps": cfg.n_cbps, "d": cfg.d, "s": cfg.s},
        "rs_criterion_note": burst_mod.RS_CRITERION_NOTE,
        "sweeps": [
            {
                "b": sweep.burst_length,
                "worst_max_run_length": sweep.worst_max_run_length,
                "reports": [
                    {
                        "start": r.start_position,
                        "b": r.burst_length,
                        "max_run": r.max_run_length,
                        "min_spacing": r.min_pairwise_spacing,
                        "rs_correctable": r.rs_correctable,
                    }
                    for r in sweep.reports
                ],
            }
            for sweep in sweeps
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_burst(
    cfg: InterleaverConfig,
    b: int | None,
    sweep_max: int | None,
    out: str | None = None,
    json_out: str | None = None,
) -> CommandOutcome:
    if (b is None) == (sweep_max is None):
        raise RangeError("give exactly one of --b and --sweep-max")
    lengths = [b] if b is not None else list(range(1, sweep_max + 1))
    if not lengths:
        raise RangeError("--sweep-max must be at least 1")
    sweeps = [burst_mod.burst_sweep(cfg, length) for length in lengths]

    lines = []
    for sweep in sweeps:
        worst = sweep.worst_max_run_length
        lines.append(
            f"b={sweep.burst_length}: worst max_run_length={worst} over "
            f"{len(sweep.reports)} starts, "
            f"rs_correctable={'yes' if worst <= burst_mod.RS_MAX_CORRECTABLE_RUN else 'NO'}"
        )
    if cfg.s == 1:
        guarded = [s for s in sweeps if s.burst_length <= cfg.rows]
        if guarded:
            holds = all(s.worst_max_run_length == 1 for s in guarded)
            lines.append(
                f"s=1 dispersal guarantee (b <= {cfg.rows} scatters every "
                f"burst to isolated bits): {'holds' if holds else 'VIOLATED'}"
            )

    artifacts = []
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(_burst_csv(cfg, sweeps))
        artifacts.append(out)
        lines.append(f"wrote CSV report to {out}")
    if json_out:
        with open(json_out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(_burst_json(cfg, sweeps))
        artifacts.append(json_out)
        lines.append(f"wrote JSON report to {json_out}")
    return CommandOutcome(0, "\n".join(lines), tuple(artifacts))


def cmd_tradeoff(
    cfg: InterleaverConfig,
    out: str | None = None,
    unit_delay_ns: float | None = None,
) -> CommandOutcome:
    if unit_delay_ns is None:
        raw = os.environ.get(UNIT_DELAY_ENV)
        if raw is not None:
            try:
                unit_delay_ns = float(raw)
            except ValueError as exc:
                raise RangeError(f"{UNIT_DELAY_ENV}={raw!r} is not a number") from exc
        else:
            unit_delay_ns = DEFAULT_UNIT_DELAY_NS
    report = compare_variants(cfg, unit_delay_ns)

    checks = [
        (
            "speed depth < area depth",
            report.speed.critical_path_depth < report.area.critical_path_depth,
        ),
        (
            "speed registers = area registers + 1",
            report.speed.register_count == report.area.register_count + 1,
        ),
    ]
    rows = reduction_check(report.paper)

    lines = [report.render_text(), "", "model ordering checks"]
    lines += [f"  {name}: {'PASS' if ok else 'FAIL'}" for name, ok in checks]
    lines.append("comparison-table arithmetic check (tolerance 0.1)")
    lines += [
        f"  {name:<12} recomputed {got:+8.2f}  printed {want:+8.2f}  "
        f"{'PASS' if ok else 'FAIL'}"
        for name, got, want, ok in rows
    ]

    all_ok = all(ok for _, ok in checks) and all(ok for *_, ok in rows)
    artifacts = []
    if out:
        payload = report.as_dict()
        payload["comparison_check"] = [
            {"name": name, "recomputed": got, "printed": want, "pass": ok}
            for name, got, want, ok in rows
        ]
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(json.dumps(payload, indent=2) + "\n")
        artifacts.append(out)
        lines.append(f"wrote JSON report to {out}")
    return CommandOutcome(0 if all_ok else 1, "\n".join(lines), tuple(artifacts))


def _add_config_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ncbps", type=int, help="coded bits per OFDM symbol")
    p.add_argument("--d", type=int, default=None, help="column count (12 or 16; default 16)")
    p.add_argument("--s", type=int, help="significance parameter (1, 2, or 3)")
    p.add_argument(
        "--preset",
        choices=sorted(PRESETS),
        help="named configuration instead of the explicit triple",
    )


def _resolve_config(args: argparse.Namespace) -> InterleaverConfig:
    explicit = [v for v in (args.ncbps, args.d, args.s) if v is not None]
    if args.preset is not None:
        if explicit:
            raise RangeError("give either --preset or --ncbps/--d/--s, not both")
        return preset(args.preset)
    if args.ncbps is None or args.s is None:
        raise RangeError("need --ncbps and --s (or --preset)")
    return validate_config(args.ncbps, args.d if args.d is not None else 16, args.s)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wimax-il",
        description=(
            "Bit-exact WiMAX (802.16e) interleaver/deinterleaver address "
            "tables, burst-dispersal reports, and datapath cost estimates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate an address table file")
    _add_config_args(p_gen)
    p_gen.add_argument(
        "--dir",
        choices=[d.value for d in Direction],
        default=Direction.DEINTERLEAVE.value,
        help="permutation direction (default deinterleave)",
    )
    p_gen.add_argument(
        "--engine",
        choices=["reference", "incremental"],
        default="reference",
        help="index math (reference) or counter generator (incremental)",
    )
    p_gen.add_argument("--out", help="output path (stdout when omitted)")

    p_verify = sub.add_parser("verify", help="run invariant checks")
    _add_config_args(p_verify)
    p_verify.add_argument(
        "--all-presets", action="store_true", help="verify every shipped preset"
    )
    p_verify.add_argument("--table", help="verify a table file instead")

    p_burst = sub.add_parser("burst", help="burst-error dispersal sweep")
    _add_config_args(p_burst)
    p_burst.add_argument("--b", type=int, help="burst length to sweep")
    p_burst.add_argument(
        "--sweep-max", type=int, help="sweep every burst length 1..M"
    )
    p_burst.add_argument("--out", help="CSV report path")
    p_burst.add_argument("--json-out", help="JSON report path")

    p_trade = sub.add_parser("tradeoff", help="area-vs-speed datapath report")
    _add_config_args(p_trade)
    p_trade.add_argument("--out", help="JSON report path")
    p_trade.add_argument(
        "--unit-delay-ns",
        type=float,
        default=None,
        help=f"combinational unit delay (default {DEFAULT_UNIT_DELAY_NS}; "
        f"env {UNIT_DELAY_ENV} overrides)",
    )

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            outcome = cmd_gen(
                _resolve_config(args),
                Direction(args.dir),
                args.engine,
                args.out,
            )
        elif args.command == "verify":
            if args.table is not None:
                outcome = cmd_verify(table_path=args.table)
            elif args.all_presets:
                outcome = cmd_verify(cfgs=list(PRESETS.values()))
            else:
                outcome = cmd_verify(cfgs=[_resolve_config(args)])
        elif args.command == "burst":
            outcome = cmd_burst(
                _resolve_config(args),
                args.b,
                args.sweep_max,
                args.out,
                args.json_out,
            )
        else:
            outcome = cmd_tradeoff(
                _resolve_config(args), args.out, args.unit_delay_ns
            )
    except InterleaverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(outcome.summary)
    return outcome.exit_code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
