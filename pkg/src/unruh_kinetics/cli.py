"""Command-line front end.

One JSON config document drives every subcommand; any field can be overridden
on the command line by its dotted name (e.g. --detector.omega0 2.0).  Output
is deterministic CSV (12 significant digits) or JSON.

Exit codes: 0 success, 1 domain error, 2 numeric non-convergence, 3 I/O error.
"""

from __future__ import annotations

import argparse
import copy
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import fermion as F
from . import kernels as K
from . import master as M
from . import rates as R
from . import response as RS
from .core import (
    AtomState,
    DetectorParams,
    DomainError,
    Inertial,
    NonConvergence,
    OrderingParam,
    Regularization,
    StepSizeError,
    ThermalState,
    UniformAcceleration,
    validate,
)

__all__ = ["main", "DEFAULT_CONFIG"]

DEFAULT_CONFIG: dict = {
    "detector": {"omega0": 1.0, "mu": 1.0},
    "thermal": {"beta": 1.0},
    "trajectory": {"kind": "accelerated", "alpha": 1.0, "v": 0.0},
    "regularization": {
        "epsilon": 1e-6,
        "n_max": 10_000,
        "quad_tol": 1e-10,
        "extrap_steps": 4,
    },
    "output": {"format": "csv", "path": None},
    "kernel": {
        "u": 1.0,
        "sweep": {
            "param": "alpha",
            "start": 0.1,
            "stop": 5.0,
            "count": 50,
            "scale": "linear",
        },
    },
    "populations": {
        "sigma_plus": 1.0,
        "tau_end": 100.0,
        "steps": None,
        "samples": 101,
    },
    "rates": {"atom": "plus", "lam": 0.5, "n": 0, "numeric": False, "field": False},
    "response": {
        "deltaE": {"start": 0.5, "stop": 5.0, "count": 10, "scale": "linear"}
    },
    "fermion": {
        "spectrum": None,
        "dt": 1.0,
        "init": [1.0, 0.0],
        "v_typ": 0.01,
        "tau_c": 1.0,
    },
    "sweep": {
        "param": "detector.omega0",
        "start": 0.5,
        "stop": 2.0,
        "count": 4,
        "scale": "linear",
        "quantity": "steady",
    },
}


# ---------------------------------------------------------------------------
# config plumbing
# ---------------------------------------------------------------------------

def _deep_merge(base: dict, override: dict) -> dict:
    out = copy.deepcopy(base)
    for key, val in override.items():
        if isinstance(val, dict) and isinstance(out.get(key), dict):
            out[key] = _deep_merge(out[key], val)
        else:
            out[key] = copy.deepcopy(val)
    return out


def _coerce(text: str):
    if text.lower() in ("inf", "+inf", "infinity"):
        return math.inf
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _set_dotted(config: dict, dotted: str, value) -> None:
    parts = dotted.split(".")
    node = config
    for part in parts[:-1]:
        if not isinstance(node.get(part), dict):
            raise DomainError(f"unknown config section '{part}' in '{dotted}'")
        node = node[part]
    if parts[-1] not in node:
        raise DomainError(f"unknown config field '{dotted}'")
    node[parts[-1]] = value


def load_config(path: str | None, overrides: list[str]) -> dict:
    config = copy.deepcopy(DEFAULT_CONFIG)
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            config = _deep_merge(config, json.load(fh))
    i = 0
    while i < len(overrides):
        arg = overrides[i]
        if not arg.startswith("--"):
            raise DomainError(f"unrecognized argument '{arg}'")
        if "=" in arg:
            name, _, raw = arg[2:].partition("=")
        else:
            if i + 1 >= len(overrides):
                raise DomainError(f"override '{arg}' is missing a value")
            name, raw = arg[2:], overrides[i + 1]
            i += 1
        _set_dotted(config, name, _coerce(raw))
        i += 1
    beta = config["thermal"]["beta"]
    if isinstance(beta, str):
        config["thermal"]["beta"] = _coerce(beta)
    return config


def _build(config: dict):
    det = DetectorParams(**config["detector"])
    beta = config["thermal"]["beta"]
    try:
        beta = float(beta)
    except (TypeError, ValueError):
        raise DomainError(f"beta must be a number or 'inf', got {beta!r}") from None
    thermal = ThermalState(beta)
    traj_cfg = config["trajectory"]
    if traj_cfg["kind"] == "accelerated":
        traj = UniformAcceleration(traj_cfg["alpha"])
    elif traj_cfg["kind"] == "inertial":
        traj = Inertial(traj_cfg.get("v", 0.0))
    else:
        raise DomainError(f"unknown trajectory kind '{traj_cfg['kind']}'")
    reg = Regularization(**config["regularization"])
    return validate(det, thermal, traj, reg)


def _grid(spec: dict) -> np.ndarray:
    count = int(spec["count"])
    if count < 1:
        raise DomainError(f"grid count must be >= 1, got {count}")
    if spec.get("scale", "linear") == "log":
        return np.geomspace(spec["start"], spec["stop"], count)
    return np.linspace(spec["start"], spec["stop"], count)


def _atom(name) -> AtomState:
    if isinstance(name, (int, float)):
        return AtomState(float(name))
    if name == "plus":
        return AtomState.plus()
    if name == "minus":
        return AtomState.minus()
    raise DomainError(f"unknown atom state '{name}' (use plus, minus, or <R3>)")


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _fmt(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return f"{x:.11e}"
    return str(x)


def emit(header: list[str], rows: list[list], config: dict) -> None:
    fmt = config["output"]["format"]
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(x) for x in row) for row in rows]
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        records = [
            {k: (None if isinstance(v, float) and math.isnan(v) else v)
             for k, v in zip(header, row)}
            for row in rows
        ]
        text = json.dumps(records, sort_keys=True, indent=2, default=str) + "\n"
    else:
        raise DomainError(f"unknown output format '{fmt}'")
    path = config["output"]["path"]
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _thread_cap() -> int:
    raw = os.environ.get("UNRUH_KINETICS_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    cap = int(raw)
    if cap < 1:
        raise DomainError(f"UNRUH_KINETICS_THREADS must be >= 1, got {raw}")
    return cap


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_kernel(config: dict) -> int:
    cfg = _build(config)
    kcfg = config["kernel"]
    u = kcfg["u"]
    sweep = kcfg["sweep"]
    param = sweep["param"]
    if param not in ("alpha", "beta"):
        raise DomainError(f"kernel sweep parameter must be alpha or beta, got {param}")
    values = _grid(sweep)
    rows = []
    failures = 0
    for val in values:
        alpha = float(val) if param == "alpha" else getattr(
            cfg.trajectory, "alpha", 1.0
        )
        beta = cfg.thermal.beta if param == "alpha" else float(val)
        try:
            g = K.g_thermal_accelerated(u, 0.0, beta, alpha, cfg.regularization)
            rows.append([u, float(val), g.value.real, g.value.imag])
        except (DomainError, NonConvergence):
            failures += 1
            rows.append([u, float(val), math.nan, math.nan])
    if failures:
        print(f"warning: {failures} grid point(s) failed", file=sys.stderr)
    emit(["tau_diff", param, "re_g", "im_g"], rows, config)
    return 0


def cmd_populations(config: dict) -> int:
    cfg = _build(config)
    pcfg = config["populations"]
    sp = pcfg["sigma_plus"]
    init = M.PopulationState(sp, 1.0 - sp)
    w0, beta = cfg.detector.omega0, cfg.thermal.beta
    traj = M.evolve(init, w0, beta, pcfg["tau_end"], pcfg["steps"])
    samples = max(1, int(pcfg["samples"]))
    idx = np.unique(
        np.linspace(0, len(traj.taus) - 1, samples).round().astype(int)
    )
    rows = []
    for i in idx:
        tau = traj.taus[i]
        num = traj.states[i]
        ref = M.closed_form(init, w0, beta, tau)
        rows.append([
            tau,
            num.sigma_plus,
            ref.sigma_plus,
            num.sigma_minus,
            ref.sigma_minus,
            abs(num.sigma_plus - ref.sigma_plus),
        ])
    emit(
        [
            "tau",
            "sigma_plus_numeric",
            "sigma_plus_closed",
            "sigma_minus_numeric",
            "sigma_minus_closed",
            "defect",
        ],
        rows,
        config,
    )
    return 0


def cmd_steady(config: dict) -> int:
    cfg = _build(config)
    w0, beta = cfg.detector.omega0, cfg.thermal.beta
    st = M.steady_state(w0, beta)
    rows = [[
        w0, beta, st.sigma_plus, st.sigma_minus,
        M.detailed_balance_ratio(w0, beta),
    ]]
    emit(
        ["omega0", "beta", "sigma_plus", "sigma_minus", "balance_ratio"],
        rows,
        config,
    )
    return 0


def cmd_rates(config: dict) -> int:
    cfg = _build(config)
    rcfg = config["rates"]
    atom = _atom(rcfg["atom"])
    lam = OrderingParam(rcfg["lam"])
    n = int(rcfg["n"])
    alpha = getattr(cfg.trajectory, "alpha", 0.0)
    if rcfg["numeric"] or n > 0:
        report = R.derivative_coupling_rates(
            cfg.detector, alpha, atom, n, cfg.regularization
        )
    else:
        report = R.atom_total_rate(cfg.detector, alpha, atom, lam)
    record = {
        "vf": report.vf,
        "rr": report.rr,
        "total": report.total,
        "finite": report.finite,
        "lambda": report.lam.lam,
        "coupling_order": report.coupling_order,
    }
    if rcfg["field"]:
        vf_f, rr_f = R.field_rates(cfg.detector, alpha, atom, cfg.regularization)
        record["vf_field"] = vf_f
        record["rr_field"] = rr_f
    header = list(record)
    emit(header, [[record[k] for k in header]], config)
    return 0


def cmd_response(config: dict) -> int:
    cfg = _build(config)
    grid = _grid(config["response"]["deltaE"])
    rows = []
    for de in grid:
        if isinstance(cfg.trajectory, Inertial):
            res = RS.response_inertial(float(de))
            alpha = 0.0
        else:
            alpha = cfg.trajectory.alpha
            res = RS.response_accelerated(float(de), alpha)
        rows.append([float(de), alpha, res.rate])
    emit(["deltaE", "alpha", "rate"], rows, config)
    return 0


def cmd_fermion(config: dict) -> int:
    cfg = _build(config)
    fcfg = config["fermion"]
    beta = cfg.thermal.beta
    if fcfg["spectrum"] is not None:
        with open(fcfg["spectrum"], "r", encoding="utf-8") as fh:
            modes = json.load(fh)
        spectrum = F.BathSpectrum(
            tuple((m["omega"], m["g"]) for m in modes), beta
        )
    else:
        spectrum = F.default_bath(cfg.detector.omega0, beta)
    rates = F.fermion_rates(spectrum, cfg.detector.omega0, fcfg["dt"])
    diag = tuple(fcfg["init"])
    d0, d1 = F.fermion_population_rhs(diag, rates)
    energy = F.fermion_energy_rate(diag, rates, cfg.detector.omega0)
    ratio = F.coarse_graining_diagnostic(fcfg["v_typ"], fcfg["tau_c"])
    valid = F.coarse_graining_valid(fcfg["v_typ"], fcfg["tau_c"])
    if not valid:
        print(
            f"warning: coarse-graining ratio {ratio} outside the "
            "Markov-Born validity regime",
            file=sys.stderr,
        )
    header = [
        "C", "T_F", "dt", "d_sigma00", "d_sigma11",
        "energy_rate", "coarse_graining_ratio", "valid",
    ]
    rows = [[rates.C, rates.T_F, rates.dt, d0, d1, energy, ratio, valid]]
    emit(header, rows, config)
    return 0


def _sweep_point(config: dict, param: str, value: float) -> list:
    local = copy.deepcopy(config)
    _set_dotted(local, param, float(value))
    cfg = _build(local)
    quantity = local["sweep"]["quantity"]
    if quantity == "steady":
        st = M.steady_state(cfg.detector.omega0, cfg.thermal.beta)
        return [float(value), st.sigma_plus, st.sigma_minus]
    if quantity == "rates":
        atom = _atom(local["rates"]["atom"])
        alpha = getattr(cfg.trajectory, "alpha", 0.0)
        rep = R.atom_total_rate(cfg.detector, alpha, atom)
        return [float(value), rep.vf, rep.rr, rep.total]
    if quantity == "response":
        alpha = getattr(cfg.trajectory, "alpha", 1.0)
        res = RS.response_accelerated(cfg.detector.omega0, alpha)
        return [float(value), res.rate]
    raise DomainError(f"unknown sweep quantity '{quantity}'")


def cmd_sweep(config: dict) -> int:
    scfg = config["sweep"]
    values = _grid(scfg)
    quantity = scfg["quantity"]
    headers = {
        "steady": ["param", "sigma_plus", "sigma_minus"],
        "rates": ["param", "vf", "rr", "total"],
        "response": ["param", "rate"],
    }
    if quantity not in headers:
        raise DomainError(f"unknown sweep quantity '{quantity}'")
    with ThreadPoolExecutor(max_workers=_thread_cap()) as pool:
        futures = [
            pool.submit(_sweep_point, config, scfg["param"], v) for v in values
        ]
        rows = [f.result() for f in futures]  # grid order, not completion order
    emit(headers[quantity], rows, config)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _verify_checks(config: dict):
    cfg = _build(config)
    reg = cfg.regularization

    def lattice_sum():
        worst = 0.0
        for u, b in [(0.5, 1.0), (1.0, 2.0), (2.0, 4.0)]:
            s = K.thermal_image_sum(u, b, reg)
            c = K.thermal_image_closed(u, b)
            worst = max(worst, abs(s - c) / abs(c))
        return worst, 1e-8

    def accelerated_image_sum():
        s = K.wightman_vacuum_accelerated_sum(1.0, 1.0, reg)
        c = K.wightman_vacuum_accelerated(1.0, 1.0)
        return abs(s.value - c.value) / abs(c.value), 1e-8

    def inertial_finite_v():
        g = K.g_thermal_inertial(1.0, 1.0, 0.5, reg)
        s = K.g_thermal_inertial_sum(1.0, 1.0, 0.5, reg)
        return abs(g.value - s.value) / abs(g.value), 1e-8

    def unruh_correspondence():
        worst = 0.0
        for alpha in np.linspace(0.5, 4.0, 5):
            ga = K.g_thermal_accelerated(1.0, 0.0, math.inf, float(alpha))
            gi = K.thermal_image_closed(1.0, 2.0 * math.pi / float(alpha))
            worst = max(worst, abs(ga.value - gi) / abs(gi))
        return worst, 1e-14

    def master_oracle():
        init = M.PopulationState(0.9, 0.1)
        worst = 0.0
        for w0, b in [(0.5, 1.0), (1.0, 10.0), (2.0, 0.1)]:
            traj = M.evolve(init, w0, b, 20.0)
            ref = M.closed_form(init, w0, b, traj.taus[-1])
            worst = max(worst, abs(traj.final.sigma_plus - ref.sigma_plus))
        return worst, 1e-8

    def steady_fixed_point():
        d_plus, _ = M.rate_rhs(M.steady_state(1.0, 1.0), 1.0, 1.0)
        return abs(d_plus), 1e-14

    def planck_bracket_identity():
        worst = 0.0
        for w0, a in [(1.0, 1.0), (2.0, 0.5), (0.5, 3.0)]:
            lhs = R.planck_bracket(w0, a)
            rhs = 1.0 / math.tanh(math.pi * w0 / a)
            worst = max(worst, abs(lhs - rhs) / rhs)
        return worst, 1e-12

    def energy_decomposition():
        rep = R.atom_total_rate(cfg.detector, 1.0, AtomState.plus())
        return abs(rep.vf + rep.rr - rep.total), 1e-12

    def fermion_limits():
        w0 = cfg.detector.omega0
        cold = F.fermion_rates(F.default_bath(w0, math.inf), w0, 1.0)
        hot = F.fermion_rates(F.default_bath(w0, 1e-6), w0, 1.0)
        err = abs(cold.T_F) + abs(hot.T_F / hot.C - 0.5)
        return err, 1e-4

    def planck_response():
        oracle = RS.planck_response_oracle(1.0, 2.0)
        closed = RS.response_accelerated(1.0, 2.0).rate
        return abs(oracle - closed) / closed, 1e-4

    return [
        ("lattice_sum", lattice_sum),
        ("accelerated_image_sum", accelerated_image_sum),
        ("inertial_finite_v", inertial_finite_v),
        ("unruh_correspondence", unruh_correspondence),
        ("master_oracle", master_oracle),
        ("steady_fixed_point", steady_fixed_point),
        ("planck_bracket_identity", planck_bracket_identity),
        ("energy_decomposition", energy_decomposition),
        ("fermion_limits", fermion_limits),
        ("planck_response", planck_response),
    ]


def cmd_verify(config: dict) -> int:
    results = []
    nonconverged = False
    for name, check in _verify_checks(config):
        try:
            error, tol = check()
            status = "pass" if error <= tol else "fail"
            results.append(
                {"check": name, "status": status, "error": error, "tol": tol}
            )
        except NonConvergence as exc:
            nonconverged = True
            results.append(
                {"check": name, "status": "nonconvergence",
                 "error": None, "tol": None, "detail": str(exc)}
            )
    report = {
        "checks": results,
        "passed": sum(r["status"] == "pass" for r in results),
        "total": len(results),
    }
    path = config["output"]["path"]
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    if nonconverged:
        return 2
    return 0 if report["passed"] == report["total"] else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

_COMMANDS = {
    "kernel": cmd_kernel,
    "populations": cmd_populations,
    "steady": cmd_steady,
    "rates": cmd_rates,
    "response": cmd_response,
    "fermion": cmd_fermion,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="unruh-kinetics",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--config", default=None, help="JSON config file")
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument("--format", choices=["csv", "json"], default=None)
    args, overrides = parser.parse_known_args(argv)
    try:
        config = load_config(args.config, overrides)
        if args.out is not None:
            config["output"]["path"] = args.out
        if args.format is not None:
            config["output"]["format"] = args.format
        return _COMMANDS[args.command](config)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NonConvergence, StepSizeError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
