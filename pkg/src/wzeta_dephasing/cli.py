"""Command-line front end for the sweep engine.

Defaults reproduce the published parameter study: delta = phi = pi/2,
eta = 1, T = 0.5, gamma = 1, alpha = 1, g = (0.1, 0.2, 0.3), N = 51.
Exit codes: 0 success, 2 configuration error, 3 I/O error.
"""

import argparse
import math
import sys
from dataclasses import replace

from .params import ModelParams, StatePrep
from .sweep import RunConfig, SweepAxis, emit, run_sweep

_FLAG_TO_FIELD = {
    "gamma": ("params", "gamma"),
    "eta": ("params", "eta"),
    "alpha": ("params", "alpha"),
    "ga": ("params", "g_a"),
    "gb": ("params", "g_b"),
    "gc": ("params", "g_c"),
    "chain-length": ("params", "chain_length"),
    "temperature": ("params", "temperature"),
    "zeta": ("prep", "zeta"),
    "delta": ("prep", "delta"),
    "phi": ("prep", "phi"),
}

_PRESET_PARTITION = {"1": ("A",), "2": ("B",), "3": ("C",),
                     "4": ("A",), "5": ("B",), "6": ("C",),
                     "7": ("A",), "8": ("B",), "9": ("C",)}


class UsageError(Exception):
    pass


def figure_preset(name: str) -> RunConfig:
    """Sweep configuration reproducing one of the published figures (fig1..fig9)."""
    if name not in {f"fig{i}" for i in range(1, 10)}:
        raise UsageError(f"unknown preset {name!r}")
    digit = name[3]
    t_axis = SweepAxis("t", 0.0, 2.0, 51)
    params = ModelParams()
    prep = StatePrep(zeta=50.0, delta=math.pi / 2, phi=math.pi / 2)
    if digit in "123":
        first = SweepAxis("zeta", 0.0, 50.0, 51)
    elif digit in "456":
        first = SweepAxis("alpha", -0.5, 1.0, 51)
    else:
        first = SweepAxis("eta", 0.65, 2.0, 51)
    return RunConfig(params=params, prep=prep, axes=(first, t_axis),
                     partitions=_PRESET_PARTITION[digit])


def _parse_sweep(text: str) -> SweepAxis:
    parts = text.split(":")
    if len(parts) != 4:
        raise UsageError(f"sweep spec must be name:start:end:steps, got {text!r}")
    name, start, end, steps = parts
    try:
        return SweepAxis(name, float(start), float(end), int(steps))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_config_file(path: str) -> dict:
    values = {}
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key = value")
                key, _, value = line.partition("=")
                key = key.strip().replace("_", "-")
                values.setdefault(key, []).append(value.strip())
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    return values


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wzeta-sweep",
        description="Sweep negativity and decoherence factors of the dephasing "
                    "three-qubit W-type state over model parameters and time.")
    for flag in _FLAG_TO_FIELD:
        kind = int if flag == "chain-length" else float
        p.add_argument(f"--{flag}", type=kind, default=None)
    p.add_argument("--sweep", action="append", default=None, metavar="NAME:START:END:STEPS")
    p.add_argument("--partition", choices=["A", "B", "C", "all"], default=None)
    p.add_argument("--format", choices=["csv", "json", "svg"], default=None)
    p.add_argument("--output", default=None, metavar="PATH")
    p.add_argument("--preset", default=None, metavar="fig1..fig9")
    p.add_argument("--config", default=None, metavar="PATH")
    return p


def parse_config(argv) -> RunConfig:
    """Resolve flags, preset and config file into a RunConfig.

    Precedence, lowest first: figure-1 defaults, --preset, --config file,
    explicit command-line flags.
    """
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit:
        raise UsageError("invalid command line") from None

    if ns.preset is not None:
        config = figure_preset(ns.preset)
    else:
        config = RunConfig(prep=StatePrep(delta=math.pi / 2, phi=math.pi / 2))

    file_values = _read_config_file(ns.config) if ns.config else {}

    def merged(flag, cli_value):
        if cli_value is not None:
            return [str(cli_value)] if not isinstance(cli_value, list) else cli_value
        return file_values.get(flag)

    try:
        for flag, (section, fieldname) in _FLAG_TO_FIELD.items():
            raw = merged(flag, getattr(ns, flag.replace("-", "_")))
            if raw is None:
                continue
            value = int(raw[-1]) if flag == "chain-length" else float(raw[-1])
            target = getattr(config, section)
            config = replace(config, **{section: replace(target, **{fieldname: value})})

        sweeps = merged("sweep", ns.sweep)
        if sweeps is not None:
            if len(sweeps) > 2:
                raise UsageError("at most 2 sweep axes are supported")
            config = replace(config, axes=tuple(_parse_sweep(s) for s in sweeps))

        partition = merged("partition", ns.partition)
        if partition is not None:
            p = partition[-1]
            config = replace(config, partitions=("A", "B", "C") if p == "all" else (p,))

        fmt = merged("format", ns.format)
        if fmt is not None:
            config = replace(config, format=fmt[-1])

        output = merged("output", ns.output)
        if output is not None:
            config = replace(config, output_path=output[-1])
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    return config


def main(argv=None) -> int:
    try:
        config = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    table = run_sweep(config)
    try:
        emit(table, config)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
