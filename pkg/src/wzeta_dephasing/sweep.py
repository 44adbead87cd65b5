"""Parameter sweeps over the model and preparation parameters, with CSV/JSON/SVG output."""

import dataclasses
import json
from dataclasses import dataclass, field, replace

import numpy as np

from .decoherence import factor_triple
from .entanglement import SUBSYSTEMS, negativity
from .params import ModelParams, StatePrep
from .state_evolution import apply_factors, initial_density

PARAM_AXES = ("gamma", "eta", "alpha", "temperature", "g_a", "g_b", "g_c")
PREP_AXES = ("zeta", "delta", "phi")
AXIS_NAMES = ("t",) + PREP_AXES + PARAM_AXES

CSV_COLUMNS = ("n_a_bc", "n_b_ca", "n_c_ab", "abs_f23", "abs_f25", "abs_f35")


@dataclass(frozen=True)
class SweepAxis:
    """One swept parameter: `steps` evenly spaced values from start to end."""

    name: str
    start: float
    end: float
    steps: int

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise ValueError(f"unknown sweep axis {self.name!r}")
        if self.steps < 1:
            raise ValueError("sweep steps must be >= 1")
        if self.start > self.end:
            raise ValueError("sweep start must be <= end")

    @property
    def values(self):
        return np.linspace(self.start, self.end, self.steps)


@dataclass(frozen=True)
class RunConfig:
    """Everything one sweep run needs: fixed parameters, axes and output."""

    params: ModelParams = ModelParams()
    prep: StatePrep = StatePrep()
    axes: tuple = ()
    partitions: tuple = SUBSYSTEMS
    format: str = "csv"
    output_path: str = "-"
    time: float = 0.0  # fixed evolution time when t is not a sweep axis

    def __post_init__(self):
        if len(self.axes) > 2:
            raise ValueError("at most 2 sweep axes are supported")
        if not self.partitions:
            raise ValueError("at least one partition is required")
        for p in self.partitions:
            if p not in SUBSYSTEMS:
                raise ValueError(f"unknown partition {p!r}")
        if self.format not in ("csv", "json", "svg"):
            raise ValueError(f"unknown output format {self.format!r}")


@dataclass
class ResultTable:
    """Sweep results in row-major order over the axes (first axis outermost)."""

    axes: tuple
    rows: list = field(default_factory=list)

    @property
    def header(self):
        return tuple(ax.name for ax in self.axes) + CSV_COLUMNS


def _apply_axis(params, prep, t, name, value):
    if name == "t":
        return params, prep, float(value)
    if name in PREP_AXES:
        return params, replace(prep, **{name: float(value)}), t
    return replace(params, **{name: float(value)}), prep, t


def run_sweep(config: RunConfig) -> ResultTable:
    """Evaluate decoherence factors and negativities over the sweep grid.

    All three one-qubit cuts are always computed (they share the eigensolve
    cost); the partition selection only controls which heatmaps are drawn.
    """
    table = ResultTable(axes=tuple(config.axes))
    grids = [ax.values for ax in config.axes]
    index = np.ndindex(*(len(g) for g in grids)) if grids else iter([()])
    cache = {}
    for idx in index:
        coords = tuple(float(g[i]) for g, i in zip(grids, idx))
        params, prep, t = config.params, config.prep, config.time
        for ax, value in zip(config.axes, coords):
            params, prep, t = _apply_axis(params, prep, t, ax.name, value)
        key = (params, t)
        if key not in cache:  # factors are independent of the prep axes
            cache[key] = factor_triple(t, params)
        factors = cache[key]
        rho = apply_factors(initial_density(prep), factors)
        negs = tuple(negativity(rho, s) for s in SUBSYSTEMS)
        table.rows.append(coords + negs +
                          (abs(factors.f23), abs(factors.f25), abs(factors.f35)))
    return table


def _fmt(v):
    return f"{v:.12g}"


def render_csv(table: ResultTable) -> str:
    lines = [",".join(table.header)]
    for row in table.rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def render_json(table: ResultTable, config: RunConfig) -> str:
    echo = {
        "params": dataclasses.asdict(config.params),
        "prep": dataclasses.asdict(config.prep),
        "axes": [dataclasses.asdict(ax) for ax in config.axes],
        "partitions": list(config.partitions),
        "time": config.time,
    }
    rows = [{k: float(_fmt(v)) for k, v in zip(table.header, row)} for row in table.rows]
    return json.dumps({"config": echo, "rows": rows}, indent=2) + "\n"


# 3-stop linear color scale for negativity in [0, 0.5]
_COLOR_STOPS = ((0x44, 0x01, 0x54), (0x21, 0x91, 0x8c), (0xfd, 0xe7, 0x25))


def _color(value):
    u = min(max(value / 0.5, 0.0), 1.0) * 2.0
    lo, hi = (_COLOR_STOPS[0], _COLOR_STOPS[1]) if u <= 1.0 else (_COLOR_STOPS[1], _COLOR_STOPS[2])
    frac = u if u <= 1.0 else u - 1.0
    rgb = [round(a + (b - a) * frac) for a, b in zip(lo, hi)]
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def render_svg(table: ResultTable, config: RunConfig) -> str:
    """One heatmap per requested partition, stacked vertically in one document."""
    col = {"A": len(table.axes), "B": len(table.axes) + 1, "C": len(table.axes) + 2}
    n1 = table.axes[0].steps if table.axes else 1
    n2 = table.axes[1].steps if len(table.axes) > 1 else 1
    cell = max(4, 400 // max(n1, n2))
    width, height = n1 * cell + 120, n2 * cell + 80
    parts = []
    total_h = 0
    for p in config.partitions:
        y0 = total_h
        parts.append(f'<g transform="translate(0,{y0})">')
        name = {"A": "N_A-BC", "B": "N_B-CA", "C": "N_C-AB"}[p]
        parts.append(f'<text x="10" y="20" font-size="14">{name}</text>')
        for r, row in enumerate(table.rows):
            i = r // n2
            j = r % n2
            v = row[col[p]]
            x = 60 + i * cell
            y = 40 + (n2 - 1 - j) * cell
            parts.append(f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                         f'fill="{_color(v)}"><title>{_fmt(v)}</title></rect>')
        xlabel = table.axes[0].name if table.axes else ""
        ylabel = table.axes[1].name if len(table.axes) > 1 else ""
        parts.append(f'<text x="{60 + n1 * cell / 2}" y="{40 + n2 * cell + 20}" '
                     f'font-size="12" text-anchor="middle">{xlabel}</text>')
        if ylabel:
            parts.append(f'<text x="30" y="{40 + n2 * cell / 2}" font-size="12" '
                         f'text-anchor="middle" transform="rotate(-90 30 {40 + n2 * cell / 2})">'
                         f'{ylabel}</text>')
        parts.append("</g>")
        total_h += height
    body = "\n".join(parts)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{total_h}" '
            f'viewBox="0 0 {width} {total_h}">\n{body}\n</svg>\n')


def render(table: ResultTable, config: RunConfig) -> str:
    if config.format == "csv":
        return render_csv(table)
    if config.format == "json":
        return render_json(table, config)
    return render_svg(table, config)


def emit(table: ResultTable, config: RunConfig) -> bytes:
    """Render the table and write it to the configured output path."""
    data = render(table, config).encode()
    if config.output_path == "-":
        import sys
        sys.stdout.buffer.write(data)
    else:
        with open(config.output_path, "wb") as fh:
            fh.write(data)
    return data
