"""Command-line front end: asymptotic summary table, probe sweeps, checks.

Every command emits a self-describing CSV or JSON document (header block
with version, parameters, and seed) so runs can be reproduced from their
own output.  Exit codes: 0 success, 1 tolerance failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys

import numpy as np

from . import __version__
from .bounds import (
    bound_centroid,
    bound_separation,
    bound_single_freq,
    centroid_asymptote,
    gaussian_fisher,
    separation_asymptote,
    single_freq_asymptote,
)
from .coherent import (
    CoherentFieldSpec,
    CoherentKind,
    analytic_spread,
    centroid_coherent_asymptote,
    coherent_bound,
    separation_coherent_asymptote,
    single_freq_coherent_asymptote,
    spread_integral_qfi,
)
from .errors import AcqfiError
from .montecarlo import McConfig, empirical_char, empirical_variance
from .phase import (
    phase_distribution,
    phase_pulse_effective,
    phase_pulse_exact,
    pulse_phase_quadrature,
)
from .qfi import fidelity_qfi, sld_qfi, two_level_qfi
from .signals import AmplitudeDraw, ControlSpec, Protocol, SignalSpec
from .states import dephasing_factor, dicke_superposition_state, ghz_state, qubit_state
from .sweeps import DEFAULT_SIGMAS, separation_sweep, single_freq_sweep

CONFIG_ENV = "ACQFI_CONFIG"

# Dimensionless small parameter pinning the asymptotic regime of the
# summary table: omega * t for every protocol row.
TABLE_SMALL_X = 0.02

# Centroid-row separation, relative to omega_s.  The centroid asymptote
# holds for omega_r << omega_s^2 t; at 1e-4 omega_s the separation term
# contributes ~3e-4 of the deviation budget at x = 0.02.
TABLE_CENTROID_RATIO = 1e-4

MC_Z_LIMIT = 4.0
MC_CHAR_KMAX = 10
PULSE_RESIDUAL_TOL = 1e-9
PULSE_SLOPE_WINDOW = (0.9, 1.1)
PULSE_AMP = (1.0, 0.5)
PULSE_RATIOS = (1e-3, 3.162e-3, 1e-2, 3.162e-2, 1e-1, 0.3)
PULSE_COUNTS = (1, 2, 5, 10, 20, 50, 100, 200)

_PROTOCOL_NAMES = {
    "free": Protocol.FREE,
    "centroid": Protocol.CENTROID_FREE,
    "separation": Protocol.SEPARATION_CONTROLLED,
}


def _status_of(err: Exception) -> str:
    if isinstance(err, ValueError):
        return "domain-error"
    name = type(err).__name__
    name = name.removesuffix("Error")
    return re.sub(r"(?<!^)(?=[A-Z])", "-", name).lower()


# ---------------------------------------------------------------------------
# Configuration file and flag resolution


def _load_config(path: str | None) -> dict[str, str]:
    """Flat key = value file; '#' starts a comment; keys match flag names."""
    if not path:
        return {}
    config: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value, got {raw!r}")
            key, value = line.split("=", 1)
            config[key.strip().replace("-", "_")] = value.strip()
    return config


class _Resolver:
    """Flag > config file > built-in default, with type casting."""

    def __init__(self, args: argparse.Namespace, config: dict[str, str]):
        self.args = args
        self.config = config

    def get(self, name: str, default, cast=float):
        flag = getattr(self.args, name, None)
        if flag is not None:
            return flag
        if name in self.config:
            raw = self.config[name]
            try:
                return cast(raw)
            except ValueError as err:
                raise ValueError(f"config key {name} = {raw!r}: {err}") from err
        return default


def _int(raw) -> int:
    value = int(str(raw), 0) if isinstance(raw, str) else int(raw)
    return value


# ---------------------------------------------------------------------------
# Document rendering


def _fmt_cell(value) -> str:
    if value is None:
        return "nan"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def _emit(meta: dict, columns: list[str], rows: list[dict], fmt: str,
          out: str | None) -> None:
    if fmt == "csv":
        lines = [f"# {key} = {_fmt_cell(value)}" for key, value in meta.items()]
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(_fmt_cell(row.get(col)) for col in columns))
        text = "\n".join(lines) + "\n"
    else:
        doc = {"meta": _json_safe(meta),
               "rows": [_json_safe({col: row.get(col) for col in columns})
                        for row in rows]}
        text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _meta(command: str, **params) -> dict:
    meta = {"version": __version__, "command": command}
    meta.update(params)
    return meta


# ---------------------------------------------------------------------------
# bound


def _bound_row(kind: str, omega: float, omega_s: float, omega_r: float,
               t: float) -> dict:
    row = {"theta": None, "kind": kind, "omega": None, "omega_s": None,
           "omega_r": None, "t": t, "bound_value": None,
           "asymptote_value": None, "ratio": None, "status": "ok"}
    try:
        if kind == "single":
            row["omega"] = omega
            report = bound_single_freq(omega, t)
            asym = single_freq_asymptote(omega, t)
        elif kind == "centroid":
            row["omega_s"], row["omega_r"] = omega_s, omega_r
            report = bound_centroid(omega_s, omega_r, t)
            asym = centroid_asymptote(omega_s, t)
        else:
            row["omega_r"] = omega_r
            report = bound_separation(omega_r, t)
            asym = separation_asymptote(omega_r)
        row["theta"] = report.parameter.value
        row["bound_value"] = report.value
        row["asymptote_value"] = asym
        row["ratio"] = report.value / asym
    except AcqfiError as err:
        row["status"] = _status_of(err)
    return row


def cmd_bound(args: argparse.Namespace, config: dict[str, str]) -> int:
    get = _Resolver(args, config).get
    row = _bound_row(args.kind,
                     omega=get("omega", 1.0),
                     omega_s=get("omega_s", 1.0),
                     omega_r=get("omega_r", 0.1),
                     t=get("t", 1.0))
    meta = _meta("bound", kind=args.kind, omega=row["omega"],
                 omega_s=row["omega_s"], omega_r=row["omega_r"], t=row["t"])
    columns = ["theta", "kind", "omega", "omega_s", "omega_r", "t",
               "bound_value", "asymptote_value", "ratio", "status"]
    _emit(meta, columns, [row], get("format", "csv", str), get("out", None, str))
    return 0


# ---------------------------------------------------------------------------
# probe-qfi


def cmd_probe_qfi(args: argparse.Namespace, config: dict[str, str]) -> int:
    get = _Resolver(args, config).get
    protocol_name = get("protocol", "free", str)
    if protocol_name not in _PROTOCOL_NAMES:
        raise ValueError(f"unknown protocol {protocol_name!r}")
    protocol = _PROTOCOL_NAMES[protocol_name]
    state = get("state", "ghz", str)
    n = _int(get("n_qubits", 10, _int))
    sigma = get("sigma", 1.0)
    t = get("t", 0.7)
    omega = get("omega", 1.0)
    omega_s = get("omega_s", 1.0)
    omega_r = get("omega_r", 0.1)
    approx = bool(args.approx)

    if protocol is Protocol.FREE:
        theta0 = omega

        def build(theta: float):
            return phase_distribution(SignalSpec.single(theta, sigma), protocol, t)
    elif protocol is Protocol.CENTROID_FREE:
        theta0 = omega_s

        def build(theta: float):
            return phase_distribution(SignalSpec.from_centroid(theta, omega_r, sigma),
                                      protocol, t, approx=approx)
    else:
        theta0 = omega_r

        def build(theta: float):
            return phase_distribution(SignalSpec.from_centroid(omega_s, theta, sigma),
                                      protocol, t, approx=approx)

    row = {"state": state, "protocol": protocol.value, "n_qubits": n,
           "sigma": sigma, "t": t, "omega": omega if protocol is Protocol.FREE else None,
           "omega_s": None if protocol is Protocol.FREE else omega_s,
           "omega_r": None if protocol is Protocol.FREE else omega_r,
           "theta": None, "qfi_value": None, "qfi_method": None,
           "qfi_crosscheck": None, "bound_value": None, "status": "ok"}
    try:
        dist = build(theta0)
        row["theta"] = dist.theta_name.value
        row["bound_value"] = gaussian_fisher(dist).value
        if state == "qubit":
            gamma, dgamma = dephasing_factor(1, dist)
            row["qfi_value"] = two_level_qfi(gamma, dgamma).value
            row["qfi_method"] = "two_level"
            row["qfi_crosscheck"] = sld_qfi(qubit_state(dist)).value
        elif state == "ghz":
            gamma, dgamma = dephasing_factor(n, dist)
            row["qfi_value"] = two_level_qfi(gamma, dgamma).value
            row["qfi_method"] = "two_level"
            row["qfi_crosscheck"] = sld_qfi(ghz_state(n, dist)).value
        else:
            row["qfi_value"] = sld_qfi(dicke_superposition_state(n, dist)).value
            row["qfi_method"] = "sld"
            row["qfi_crosscheck"] = fidelity_qfi(
                lambda th: dicke_superposition_state(n, build(th)), theta0,
                delta=5e-3 * max(abs(theta0), 1.0)).value
    except AcqfiError as err:
        row["status"] = _status_of(err)
    meta = _meta("probe-qfi", state=state, protocol=protocol.value, n_qubits=n,
                 sigma=sigma, t=t, omega=omega, omega_s=omega_s, omega_r=omega_r,
                 approx=approx)
    columns = ["state", "protocol", "theta", "n_qubits", "sigma", "t", "omega",
               "omega_s", "omega_r", "qfi_value", "qfi_method", "qfi_crosscheck",
               "bound_value", "status"]
    _emit(meta, columns, [row], get("format", "csv", str), get("out", None, str))
    return 0


# ---------------------------------------------------------------------------
# table1


def _table_row(formula_id: str, value: float, asymptote: float) -> dict:
    return {"formula_id": formula_id, "value": value, "asymptote": asymptote,
            "relative_deviation": value / asymptote - 1.0, "status": "ok"}


def _stochastic_triplet(prefix: str, dist, n: int, bound_value: float,
                        qubit_asym: float, bound_asym: float) -> list[dict]:
    gamma1, dgamma1 = dephasing_factor(1, dist)
    gamman, dgamman = dephasing_factor(n, dist)
    return [
        _table_row(f"{prefix}.stochastic_qubit",
                   two_level_qfi(gamma1, dgamma1).value, qubit_asym),
        _table_row(f"{prefix}.stochastic_ghz",
                   two_level_qfi(gamman, dgamman).value, n * n * qubit_asym),
        _table_row(f"{prefix}.bound", bound_value, bound_asym),
    ]


def _coherent_pair(prefix: str, kind: CoherentKind, asym_fn, n: int,
                   b_field: float, total_time: float, omega_r: float | None) -> list[dict]:
    rows = []
    for label, nq in (("coherent_qubit", 1), ("coherent_ghz", n)):
        if omega_r is None:
            spec = CoherentFieldSpec(b_field, total_time, n_qubits=nq)
        else:
            spec = CoherentFieldSpec(b_field, total_time, n_qubits=nq,
                                     omega_s=50.0 * omega_r, omega_r=omega_r)
        rows.append(_table_row(f"{prefix}.{label}",
                               coherent_bound(kind, spec).value, asym_fn(spec)))
    return rows


def cmd_table1(args: argparse.Namespace, config: dict[str, str]) -> int:
    get = _Resolver(args, config).get
    t = get("t", 1e-3)
    sigma = get("sigma", 1.0)
    n = _int(get("n_qubits", 10, _int))
    omega = get("omega", TABLE_SMALL_X / t)
    omega_r_sep = get("omega_r", TABLE_SMALL_X / t)
    omega_s = omega
    omega_r_cen = TABLE_CENTROID_RATIO * omega_s
    b_field = 1.0
    total_time = 1.0
    omega_r_coh = TABLE_SMALL_X / total_time

    single = phase_distribution(SignalSpec.single(omega, sigma), Protocol.FREE, t)
    centroid = phase_distribution(SignalSpec.from_centroid(omega_s, omega_r_cen, sigma),
                                  Protocol.CENTROID_FREE, t, approx=True)
    separation = phase_distribution(
        SignalSpec.from_centroid(10.0 * omega_r_sep, omega_r_sep, sigma),
        Protocol.SEPARATION_CONTROLLED, t, approx=True)

    rows: list[dict] = []
    rows += _coherent_pair("single", CoherentKind.SINGLE_FREQ,
                           single_freq_coherent_asymptote, n, b_field, total_time, None)
    rows += _stochastic_triplet(
        "single", single, n, bound_single_freq(omega, t).value,
        sigma ** 2 * t ** 6 * omega ** 2 / 36.0, single_freq_asymptote(omega, t))
    rows += _coherent_pair("centroid", CoherentKind.CENTROID,
                           centroid_coherent_asymptote, n, b_field, total_time,
                           omega_r_coh)
    rows += _stochastic_triplet(
        "centroid", centroid, n, bound_centroid(omega_s, omega_r_cen, t).value,
        sigma ** 2 * t ** 6 * omega_s ** 2 / 18.0, centroid_asymptote(omega_s, t))
    rows += _coherent_pair("separation", CoherentKind.SEPARATION,
                           separation_coherent_asymptote, n, b_field, total_time,
                           omega_r_coh)
    rows += _stochastic_triplet(
        "separation", separation, n, bound_separation(omega_r_sep, t).value,
        8.0 * sigma ** 2 * t ** 4 / math.pi ** 4, separation_asymptote(omega_r_sep))

    meta = _meta("table1", t=t, sigma=sigma, n_qubits=n, omega=omega,
                 omega_s=omega_s, omega_r_separation=omega_r_sep,
                 omega_r_centroid=omega_r_cen, b_field=b_field,
                 total_time=total_time, omega_r_coherent=omega_r_coh)
    columns = ["formula_id", "value", "asymptote", "relative_deviation", "status"]
    _emit(meta, columns, rows, get("format", "json", str), get("out", None, str))
    return 0


# ---------------------------------------------------------------------------
# fig2 / fig3


def _sweep_command(name: str, args: argparse.Namespace, config: dict[str, str]) -> int:
    get = _Resolver(args, config).get
    t = get("t", 0.7)
    n_max = _int(get("n_max", 100, _int))
    sigma = get("sigma", None)
    sigmas = DEFAULT_SIGMAS if sigma is None else (sigma,)
    if name == "fig2":
        omega = get("omega", 1.0)
        rows = single_freq_sweep(omega=omega, t=t, sigmas=sigmas, n_max=n_max)
        meta = _meta(name, omega=omega, t=t, n_max=n_max,
                     sigmas=" ".join("%g" % s for s in sigmas))
    else:
        omega_r = get("omega_r", 0.7)
        rows = separation_sweep(omega_r=omega_r, t=t, sigmas=sigmas, n_max=n_max)
        meta = _meta(name, omega_r=omega_r, t=t, n_max=n_max,
                     sigmas=" ".join("%g" % s for s in sigmas))
    columns = ["N", "sigma", "state", "qfi_method", "qfi_value",
               "qfi_crosscheck", "bound_value", "status"]
    _emit(meta, columns, rows, get("format", "csv", str), get("out", None, str))
    return 0


def cmd_fig2(args, config):
    return _sweep_command("fig2", args, config)


def cmd_fig3(args, config):
    return _sweep_command("fig3", args, config)


# ---------------------------------------------------------------------------
# montecarlo


def _mc_grid(sigma: float):
    return (
        ("free", SignalSpec.single(1.0, sigma), Protocol.FREE),
        ("centroid", SignalSpec.from_centroid(1.0, 0.1, sigma), Protocol.CENTROID_FREE),
        ("separation", SignalSpec.from_centroid(7.0, 0.7, sigma),
         Protocol.SEPARATION_CONTROLLED),
    )


def cmd_montecarlo(args: argparse.Namespace, config: dict[str, str]) -> int:
    get = _Resolver(args, config).get
    seed = get("seed", None, _int)
    if seed is None:
        print("montecarlo: --seed is required", file=sys.stderr)
        return 2
    samples = _int(get("samples", 1_000_000, _int))
    sigma = get("sigma", 1.0)
    t = get("t", 0.7)
    cfg = McConfig(seed=_int(seed), sample_count=samples)
    rows = []
    worst = 0.0
    for name, spec, protocol in _mc_grid(sigma):
        dist = phase_distribution(spec, protocol, t)
        var, var_se = empirical_variance(spec, protocol, t, cfg)
        z = (var - dist.variance) / var_se
        worst = max(worst, abs(z))
        rows.append({"protocol": name, "quantity": "variance", "k": None,
                     "analytic": dist.variance, "empirical": var,
                     "std_error": var_se, "z_score": z})
        for k in range(1, MC_CHAR_KMAX + 1):
            est = empirical_char(spec, protocol, t, k, cfg)
            gamma = math.exp(-2.0 * k * k * dist.variance)
            z_re = (est.real - gamma) / est.se_real
            z_im = est.imag / est.se_imag
            worst = max(worst, abs(z_re), abs(z_im))
            rows.append({"protocol": name, "quantity": "char_real", "k": k,
                         "analytic": gamma, "empirical": est.real,
                         "std_error": est.se_real, "z_score": z_re})
            rows.append({"protocol": name, "quantity": "char_imag", "k": k,
                         "analytic": 0.0, "empirical": est.imag,
                         "std_error": est.se_imag, "z_score": z_im})
    meta = _meta("montecarlo", seed=_int(seed), samples=samples, sigma=sigma, t=t,
                 k_max=MC_CHAR_KMAX, z_limit=MC_Z_LIMIT, max_abs_z=worst)
    columns = ["protocol", "quantity", "k", "analytic", "empirical",
               "std_error", "z_score"]
    _emit(meta, columns, rows, get("format", "csv", str), get("out", None, str))
    return 0 if worst < MC_Z_LIMIT else 1


# ---------------------------------------------------------------------------
# pulse-verify


def cmd_pulse_verify(args: argparse.Namespace, config: dict[str, str]) -> int:
    get = _Resolver(args, config).get
    omega = get("omega", 1.0)
    draw = AmplitudeDraw.single(*PULSE_AMP)
    spec = SignalSpec.single(omega, 1.0)
    rows = []
    eff_errors: dict[float, list[float]] = {ratio: [] for ratio in PULSE_RATIOS}
    max_residual = 0.0
    for ratio in PULSE_RATIOS:
        delta = ratio * omega
        for n_pulses in PULSE_COUNTS:
            control = ControlSpec.single_freq(omega, delta, n_pulses)
            exact = float(phase_pulse_exact(spec, control, draw))
            quad = pulse_phase_quadrature(spec, control, draw)
            effective = float(phase_pulse_effective(spec, control, draw))
            scale = max(abs(exact), (abs(draw.a[0]) + abs(draw.b[0])) * control.tau)
            residual = abs(exact - quad) / scale
            eff_err = abs(effective - exact) / abs(exact)
            max_residual = max(max_residual, residual)
            eff_errors[ratio].append(eff_err)
            rows.append({"delta_over_omega": ratio, "n_pulses": n_pulses,
                         "t": control.total_time, "phi_exact": exact,
                         "phi_quadrature": quad, "quad_residual": residual,
                         "phi_effective": effective, "eff_rel_error": eff_err})
    log_x = np.log([ratio for ratio in PULSE_RATIOS])
    log_y = np.log([float(np.mean(eff_errors[ratio])) for ratio in PULSE_RATIOS])
    slope = float(np.polyfit(log_x, log_y, 1)[0])
    ok = max_residual < PULSE_RESIDUAL_TOL and \
        PULSE_SLOPE_WINDOW[0] <= slope <= PULSE_SLOPE_WINDOW[1]
    meta = _meta("pulse-verify", omega=omega, amp_a=draw.a[0], amp_b=draw.b[0],
                 residual_tol=PULSE_RESIDUAL_TOL, max_quad_residual=max_residual,
                 eff_error_slope=slope, slope_window="%g..%g" % PULSE_SLOPE_WINDOW)
    columns = ["delta_over_omega", "n_pulses", "t", "phi_exact", "phi_quadrature",
               "quad_residual", "phi_effective", "eff_rel_error"]
    _emit(meta, columns, rows, get("format", "csv", str), get("out", None, str))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# coherent


def cmd_coherent(args: argparse.Namespace, config: dict[str, str]) -> int:
    get = _Resolver(args, config).get
    kinds = {"single": CoherentKind.SINGLE_FREQ, "separation": CoherentKind.SEPARATION,
             "centroid": CoherentKind.CENTROID}
    selected = [args.kind] if args.kind else ["single", "separation", "centroid"]
    b_field = get("b_field", 1.0)
    total_time = get("total_time", 1.0)
    n = _int(get("n_qubits", 1, _int))
    omega_s = get("omega_s", 1.0)
    omega_r = get("omega_r", 0.02)
    asym_fns = {"single": single_freq_coherent_asymptote,
                "separation": separation_coherent_asymptote,
                "centroid": centroid_coherent_asymptote}
    rows = []
    for name in selected:
        kind = kinds[name]
        if kind is CoherentKind.SINGLE_FREQ:
            spec = CoherentFieldSpec(b_field, total_time, n_qubits=n)
        else:
            spec = CoherentFieldSpec(b_field, total_time, n_qubits=n,
                                     omega_s=omega_s, omega_r=omega_r)
        row = {"kind": name, "n_qubits": n, "b_field": b_field,
               "total_time": total_time,
               "omega_r": None if kind is CoherentKind.SINGLE_FREQ else omega_r,
               "bound_value": None, "asymptote": None, "ratio": None,
               "quadrature_value": None, "quad_rel_dev": None, "status": "ok"}
        try:
            bound = coherent_bound(kind, spec).value
            asym = asym_fns[name](spec)
            quad = spread_integral_qfi(
                lambda u: analytic_spread(kind, spec, u), total_time).value
            row.update(bound_value=bound, asymptote=asym, ratio=bound / asym,
                       quadrature_value=quad, quad_rel_dev=quad / bound - 1.0)
        except (AcqfiError, ValueError) as err:
            row["status"] = _status_of(err)
        rows.append(row)
    meta = _meta("coherent", b_field=b_field, total_time=total_time, n_qubits=n,
                 omega_s=omega_s, omega_r=omega_r)
    columns = ["kind", "n_qubits", "b_field", "total_time", "omega_r",
               "bound_value", "asymptote", "ratio", "quadrature_value",
               "quad_rel_dev", "status"]
    _emit(meta, columns, rows, get("format", "csv", str), get("out", None, str))
    return 0


# ---------------------------------------------------------------------------
# Parser


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--omega", type=float, default=None)
    sub.add_argument("--omega-s", dest="omega_s", type=float, default=None)
    sub.add_argument("--omega-r", dest="omega_r", type=float, default=None)
    sub.add_argument("--t", type=float, default=None)
    sub.add_argument("--sigma", type=float, default=None)
    sub.add_argument("--n-qubits", dest="n_qubits", type=int, default=None)
    sub.add_argument("--n-max", dest="n_max", type=int, default=None)
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--samples", type=int, default=None)
    sub.add_argument("--out", type=str, default=None)
    sub.add_argument("--format", choices=("csv", "json"), default=None)
    sub.add_argument("--config", type=str, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acqfi",
        description="Precision bounds and probe QFI for stochastic AC signals")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="subcommand", required=True)

    bound = subs.add_parser("bound", help="closed-form precision bound vs asymptote")
    bound.add_argument("--kind", choices=("single", "centroid", "separation"),
                       required=True)
    _add_common(bound)
    bound.set_defaults(func=cmd_bound)

    probe = subs.add_parser("probe-qfi", help="QFI of one probe state with cross-check")
    probe.add_argument("--state", choices=("qubit", "ghz", "dicke"), required=True)
    probe.add_argument("--protocol", choices=tuple(_PROTOCOL_NAMES), default=None)
    probe.add_argument("--approx", action="store_true",
                       help="use the small-separation branch of the phase law")
    _add_common(probe)
    probe.set_defaults(func=cmd_probe_qfi)

    table = subs.add_parser("table1", help="asymptotic summary (15 formula entries)")
    _add_common(table)
    table.set_defaults(func=cmd_table1)

    fig2 = subs.add_parser("fig2", help="QFI vs N sweep, single-tone protocol")
    _add_common(fig2)
    fig2.set_defaults(func=cmd_fig2)

    fig3 = subs.add_parser("fig3", help="QFI vs N sweep, separation protocol")
    _add_common(fig3)
    fig3.set_defaults(func=cmd_fig3)

    mc = subs.add_parser("montecarlo", help="sampled vs analytic phase statistics")
    _add_common(mc)
    mc.set_defaults(func=cmd_montecarlo)

    pulse = subs.add_parser("pulse-verify",
                            help="pulse-train closed form vs quadrature oracle")
    _add_common(pulse)
    pulse.set_defaults(func=cmd_pulse_verify)

    coherent = subs.add_parser("coherent", help="coherent-field control bounds")
    coherent.add_argument("--kind", choices=("single", "separation", "centroid"),
                          default=None)
    coherent.add_argument("--b-field", dest="b_field", type=float, default=None)
    coherent.add_argument("--total-time", dest="total_time", type=float, default=None)
    _add_common(coherent)
    coherent.set_defaults(func=cmd_coherent)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config or os.environ.get(CONFIG_ENV))
        return args.func(args, config)
    except (OSError, ValueError) as err:
        print(f"acqfi: {err}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())
