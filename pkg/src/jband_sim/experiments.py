"""Named parameter studies and their tabulated results.

Each preset pins the parameter values of one bundled study; ``run_experiment``
turns a spec into a deterministic table whose first column is the sweep
variable.  Entropy studies produce two tables, the summed site entropy and
its per-site average, exposed via ``run_experiment_outputs``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .core import ModelParams, validate_params
from .measures import concurrence_vs_size_curve, entropy_report, extended_state_entropy
from .multipartite import SusceptibilityParams, SymmetricState, chi3_magnitude, geometric_entropy, zeta_ratios
from .propagator import occupation_profile

SWEEP_VARIABLES = ("t", "N", "a", "b", "c", "t_k", "M")

#: Configuration keys that set model parameters directly.
PARAM_KEYS = ("N", "a", "b", "c", "t_k", "t")

#: Fallback parameter values for custom runs and single-measure evaluation.
DEFAULT_BASE: Mapping[str, float] = {
    "a": 0.0, "b": 0.0, "c": 30.0, "t_k": 1.0, "N": 200, "t": 2.0,
}


@dataclass(frozen=True)
class SweepAxis:
    """Inclusive sweep grid: start, start + step, ... up to stop."""

    variable: str
    start: float
    stop: float
    step: float


@dataclass(frozen=True)
class ExperimentSpec:
    """A named study plus explicit overrides of its pinned defaults."""

    name: str
    params: Mapping[str, float] = field(default_factory=dict)
    sweep: SweepAxis | None = None
    output_path: str | None = None


@dataclass(frozen=True)
class CsvTable:
    """Header row plus numeric records, one tuple per sweep point."""

    header: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.header):
                raise ValueError("every row must match the header length")


@dataclass(frozen=True)
class ExperimentDef:
    name: str
    kind: str
    description: str
    base: Mapping[str, float]
    curves: tuple[Mapping[str, float], ...]
    sweep: SweepAxis
    extended_ref: bool = False


_T_GRID = SweepAxis("t", 0.0, 10.0, 0.05)
_N_GRID = SweepAxis("N", 10, 300, 10)

EXPERIMENTS: dict[str, ExperimentDef] = {
    "fig1a": ExperimentDef(
        "fig1a", "entropy_vs_t",
        "site entropy versus time for chain lengths N = 200, 100, 50 (a = b = 0, c = 30)",
        {"a": 0.0, "b": 0.0, "c": 30.0, "t_k": 1.0},
        ({"N": 200}, {"N": 100}, {"N": 50}), _T_GRID),
    "fig1b": ExperimentDef(
        "fig1b", "entropy_vs_N",
        "site entropy versus chain length at t = 2, 5, 9 (a = b = 0, c = 30)",
        {"a": 0.0, "b": 0.0, "c": 30.0, "t_k": 1.0},
        ({"t": 2.0}, {"t": 5.0}, {"t": 9.0}), _N_GRID),
    "fig1c": ExperimentDef(
        "fig1c", "entropy_vs_N",
        "site entropy versus chain length at c = 10, 20, 40 (a = b = 0, t = 2)",
        {"a": 0.0, "b": 0.0, "t_k": 1.0, "t": 2.0},
        ({"c": 10.0}, {"c": 20.0}, {"c": 40.0}), _N_GRID),
    "fig1d": ExperimentDef(
        "fig1d", "entropy_vs_N",
        "site entropy versus chain length at b = 0, 0.3, 0.5 plus the extended-state "
        "reference (a = 0, c = 30, t = 6)",
        {"a": 0.0, "c": 30.0, "t_k": 1.0, "t": 6.0},
        ({"b": 0.0}, {"b": 0.3}, {"b": 0.5}), _N_GRID, extended_ref=True),
    "fig2a": ExperimentDef(
        "fig2a", "entropy_vs_t",
        "site entropy versus time at a = 0, 0.3, 0.7, 1.5 (N = 150, b = 0, c = 10)",
        {"b": 0.0, "c": 10.0, "t_k": 1.0, "N": 150},
        ({"a": 0.0}, {"a": 0.3}, {"a": 0.7}, {"a": 1.5}), _T_GRID),
    "fig2b": ExperimentDef(
        "fig2b", "entropy_vs_t",
        "site entropy versus time at b = 0, 0.5, 1 (N = 100, a = 0, c = 20)",
        {"a": 0.0, "c": 20.0, "t_k": 1.0, "N": 100},
        ({"b": 0.0}, {"b": 0.5}, {"b": 1.0}), _T_GRID),
    "fig2c": ExperimentDef(
        "fig2c", "entropy_vs_t",
        "site entropy versus time at c = 40, 20, 5 (N = 200, a = 0.5, b = 0.3)",
        {"a": 0.5, "b": 0.3, "t_k": 1.0, "N": 200},
        ({"c": 40.0}, {"c": 20.0}, {"c": 5.0}), _T_GRID),
    "fig3": ExperimentDef(
        "fig3", "concurrence_vs_N",
        "average concurrence versus aggregate size at t_k = 2 for (c, b) in "
        "(15, 0.5), (15, 0.1), (5, 0.5), (5, 0.1)",
        {"a": 0.0, "t_k": 2.0},
        ({"c": 15.0, "b": 0.5}, {"c": 15.0, "b": 0.1},
         {"c": 5.0, "b": 0.5}, {"c": 5.0, "b": 0.1}),
        SweepAxis("N", 10, 200, 5)),
    "fig4": ExperimentDef(
        "fig4", "zeta_vs_N",
        "one- and two-exciton entropy ratios zeta1, zeta2 versus aggregate size",
        {}, ({},), SweepAxis("N", 4, 400, 4)),
    "fig5": ExperimentDef(
        "fig5", "chi3_vs_N",
        "reduced third-order susceptibility per monomer versus aggregate size "
        "(mu = 1, gamma = 0.5, delta_e = 3, omega = delta_e / 3)",
        {"mu": 1.0, "gamma": 0.5, "delta_e": 3.0, "omega": 1.0},
        ({},), SweepAxis("N", 4, 400, 4)),
    "custom": ExperimentDef(
        "custom", "custom",
        "single-curve entropy study over the configured sweep variable "
        "(defaults: a = 0, b = 0, c = 30, t_k = 1, N = 200, t = 2)",
        dict(DEFAULT_BASE), ({},), _T_GRID),
}


@dataclass(frozen=True)
class RunPlan:
    """Fully resolved study: merged parameters, curves, grid and table kind."""

    name: str
    kind: str
    base: Mapping[str, float]
    curves: tuple[Mapping[str, float], ...]
    sweep: SweepAxis
    extended_ref: bool


def _format_value(v: float) -> str:
    return f"{v:g}"


def _curve_label(curve: Mapping[str, float]) -> str:
    return "_".join(f"{k}{_format_value(v)}" for k, v in curve.items())


def _column(prefix: str, label: str) -> str:
    return f"{prefix}_{label}" if label else prefix


def sweep_grid(axis: SweepAxis) -> list[float]:
    """Materialise the inclusive grid of a sweep axis."""
    if axis.variable not in SWEEP_VARIABLES:
        raise ValueError(f"unknown sweep variable '{axis.variable}'")
    if not (math.isfinite(axis.step) and axis.step > 0):
        raise ValueError("sweep step must be > 0")
    if not (axis.start < axis.stop):
        raise ValueError("sweep start must be < stop")
    count = int(math.floor((axis.stop - axis.start) / axis.step + 1e-9)) + 1
    return [axis.start + i * axis.step for i in range(count)]


def _int_grid(axis: SweepAxis) -> list[int]:
    return [int(round(v)) for v in sweep_grid(axis)]


_CUSTOM_KINDS = {
    "t": "entropy_vs_t",
    "N": "entropy_vs_N",
    "a": "entropy_vs_param",
    "b": "entropy_vs_param",
    "c": "entropy_vs_param",
    "t_k": "entropy_vs_param",
    "M": "geometric_vs_M",
}


def resolve(spec: ExperimentSpec) -> RunPlan:
    """Merge a spec with its preset and validate the result."""
    definition = EXPERIMENTS.get(spec.name)
    if definition is None:
        raise ValueError(f"unknown experiment '{spec.name}'")

    overrides = dict(spec.params)
    for key in overrides:
        if key not in PARAM_KEYS:
            raise ValueError(f"unknown parameter '{key}'")

    sweep = spec.sweep if spec.sweep is not None else definition.sweep
    if definition.kind == "custom":
        kind = _CUSTOM_KINDS.get(sweep.variable)
        if kind is None:
            raise ValueError(f"unknown sweep variable '{sweep.variable}'")
    else:
        kind = definition.kind
        if sweep.variable != definition.sweep.variable:
            raise ValueError(
                f"experiment '{spec.name}' sweeps '{definition.sweep.variable}', "
                f"not '{sweep.variable}'")
    sweep_grid(sweep)  # validates the axis

    if sweep.variable in overrides:
        raise ValueError(
            f"'{sweep.variable}' is the sweep variable of experiment '{spec.name}' "
            "and cannot be fixed")

    curve_keys = set()
    for curve in definition.curves:
        curve_keys.update(curve)
    base = dict(definition.base)
    base.update({k: v for k, v in overrides.items() if k not in curve_keys})

    curves: list[dict[str, float]] = []
    for curve in definition.curves:
        merged = {k: overrides.get(k, v) for k, v in curve.items()}
        if merged not in curves:
            curves.append(merged)

    plan = RunPlan(name=spec.name, kind=kind, base=base, curves=tuple(curves),
                   sweep=sweep, extended_ref=definition.extended_ref)
    _validate_plan(plan)
    return plan


def _model_params(values: Mapping[str, float]) -> ModelParams:
    merged = {k: values.get(k, DEFAULT_BASE[k]) for k in ("a", "b", "c", "t_k", "N")}
    return validate_params(ModelParams(a=float(merged["a"]), b=float(merged["b"]),
                                       c=float(merged["c"]), t_k=float(merged["t_k"]),
                                       N=int(merged["N"])))


def _validate_plan(plan: RunPlan) -> None:
    t = plan.base.get("t")
    if t is not None and (not math.isfinite(float(t)) or float(t) < 0):
        raise ValueError("t must be finite and >= 0")
    if plan.kind in ("entropy_vs_t", "entropy_vs_param", "concurrence_vs_N"):
        for curve in plan.curves:
            merged = {**plan.base, **curve}
            if plan.kind == "concurrence_vs_N":
                merged["N"] = _int_grid(plan.sweep)[0]
            _model_params(merged)
    elif plan.kind == "entropy_vs_N":
        first = _int_grid(plan.sweep)[0]
        for curve in plan.curves:
            _model_params({**plan.base, **curve, "N": first})


def _entropy_tables(x_name: str, grid: list, labels: list[str],
                    evaluate: Callable[[float, int], object],
                    extended: bool = False) -> dict[str, CsvTable]:
    total_rows, avg_rows = [], []
    for x in grid:
        totals, avgs = [float(x)], [float(x)]
        for i in range(len(labels)):
            report = evaluate(x, i)
            totals.append(report.total)
            avgs.append(report.average)
        if extended:
            n = int(x)
            per_site = extended_state_entropy(n)
            totals.append(n * per_site)
            avgs.append(per_site)
        total_rows.append(tuple(totals))
        avg_rows.append(tuple(avgs))
    names = [_column("S", lab) for lab in labels]
    avg_names = [_column("S_avg", lab) for lab in labels]
    if extended:
        names.append("S_ext")
        avg_names.append("S_avg_ext")
    return {
        "": CsvTable(tuple([x_name] + names), tuple(total_rows)),
        "avg": CsvTable(tuple([x_name] + avg_names), tuple(avg_rows)),
    }


def _build_entropy_vs_t(plan: RunPlan) -> dict[str, CsvTable]:
    params = [_model_params({**plan.base, **curve}) for curve in plan.curves]
    labels = [_curve_label(curve) for curve in plan.curves]

    def evaluate(t, i):
        return entropy_report(occupation_profile(t, params[i]))

    return _entropy_tables("t", sweep_grid(plan.sweep), labels, evaluate)


def _build_entropy_vs_N(plan: RunPlan) -> dict[str, CsvTable]:
    labels = [_curve_label(curve) for curve in plan.curves]

    def evaluate(N, i):
        merged = {**plan.base, **plan.curves[i], "N": int(N)}
        return entropy_report(occupation_profile(float(merged["t"]), _model_params(merged)))

    return _entropy_tables("N", _int_grid(plan.sweep), labels, evaluate,
                           extended=plan.extended_ref)


def _build_entropy_vs_param(plan: RunPlan) -> dict[str, CsvTable]:
    var = plan.sweep.variable
    labels = [_curve_label(curve) for curve in plan.curves]

    def evaluate(value, i):
        merged = {**plan.base, **plan.curves[i], var: float(value)}
        return entropy_report(occupation_profile(float(merged["t"]), _model_params(merged)))

    return _entropy_tables(var, sweep_grid(plan.sweep), labels, evaluate)


def _build_concurrence_vs_N(plan: RunPlan) -> dict[str, CsvTable]:
    grid = _int_grid(plan.sweep)
    labels = [_curve_label(curve) for curve in plan.curves]
    columns = []
    for curve in plan.curves:
        p = _model_params({**plan.base, **curve, "N": grid[0]})
        columns.append([value for _, value in concurrence_vs_size_curve(p, grid)])
    header = tuple(["N"] + [_column("C", lab) for lab in labels])
    rows = tuple(tuple([float(n)] + [col[i] for col in columns])
                 for i, n in enumerate(grid))
    return {"": CsvTable(header, rows)}


def _build_zeta_vs_N(plan: RunPlan) -> dict[str, CsvTable]:
    rows = []
    for N in _int_grid(plan.sweep):
        z1, z2 = zeta_ratios(N)
        rows.append((float(N), z1, z2))
    return {"": CsvTable(("N", "zeta1", "zeta2"), tuple(rows))}


def _build_chi3_vs_N(plan: RunPlan) -> dict[str, CsvTable]:
    sp = SusceptibilityParams(mu=float(plan.base["mu"]), gamma=float(plan.base["gamma"]),
                              delta_e=float(plan.base["delta_e"]), omega=float(plan.base["omega"]))
    rows = []
    for N in _int_grid(plan.sweep):
        reduced = (geometric_entropy(SymmetricState(N, 1))
                   * geometric_entropy(SymmetricState(N, 2)))
        rows.append((float(N), reduced, chi3_magnitude(N, sp) / N))
    return {"": CsvTable(("N", "chi3_reduced", "chi3_over_N"), tuple(rows))}


def _build_geometric_vs_M(plan: RunPlan) -> dict[str, CsvTable]:
    N = int(plan.base.get("N", DEFAULT_BASE["N"]))
    rows = []
    for M in _int_grid(plan.sweep):
        rows.append((float(M), geometric_entropy(SymmetricState(N, M))))
    return {"": CsvTable(("M", "E_geom"), tuple(rows))}


_BUILDERS: dict[str, Callable[[RunPlan], dict[str, CsvTable]]] = {
    "entropy_vs_t": _build_entropy_vs_t,
    "entropy_vs_N": _build_entropy_vs_N,
    "entropy_vs_param": _build_entropy_vs_param,
    "concurrence_vs_N": _build_concurrence_vs_N,
    "zeta_vs_N": _build_zeta_vs_N,
    "chi3_vs_N": _build_chi3_vs_N,
    "geometric_vs_M": _build_geometric_vs_M,
}


def run_experiment_outputs(spec: ExperimentSpec) -> dict[str, CsvTable]:
    """All tables of a study, keyed by filename suffix ('' is the primary)."""
    plan = resolve(spec)
    return _BUILDERS[plan.kind](plan)


def run_experiment(spec: ExperimentSpec) -> CsvTable:
    """The primary table of a study (the plotted quantity)."""
    return run_experiment_outputs(spec)[""]
