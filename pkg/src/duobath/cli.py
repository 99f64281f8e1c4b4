"""
Command-line front end.

Subcommands: modes (mode frequencies and participation ratios over a
coupling sweep), evolve (moments along a time grid), steady (stationary
moments over a sweep axis), fdt (single-oscillator reference variances),
verify (regenerate a preset and machine-check its qualitative features).

Inputs come from a figure preset (--preset) or an INI config (--config)
with sections [system], [baths], [initial], [sweep], [times],
[tolerances], [output]; all physical quantities in CGS + Kelvin.  Output
is CSV with a "# schema=1" first line and floats printed to 12
significant digits, so identical inputs give byte-identical files.
Exit codes: 0 clean, 2 when any output row carries an error annotation,
1 on fatal configuration problems.
"""

from __future__ import annotations

import argparse
import configparser
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errata import DEFAULT, Errata, parse_errata
from .errors import ConfigError, DuobathError
from .fdt import coupled_spectral_steady, fdt_variance, normalize_moments
from .model import (BathSpec, InitialState, SystemParams, default_cutoff,
                    normal_modes, normalized_coupling)
from .presets import PRESETS, PresetCase, get_preset
from .state import evolve, steady_state

_SCHEMA_LINE = "# schema=1"


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand needs, after merging config and flags."""

    cases: tuple
    axis: str | None
    axis_values: tuple
    times: tuple
    rel_tol: float = 1e-9
    steady_tol: float = 1e-3
    errata: Errata = DEFAULT
    threads: int = 1
    oracle: bool = False
    cutoff_mult: float | None = None
    explicit_cutoff: float | None = None
    source: str = "config"


# ------------------------------------------------------------ helpers

def _with_coupling(p: SystemParams, lt: float) -> SystemParams:
    lam = lt * p.w01 * p.w02 * math.sqrt(p.M1 * p.M2)
    return SystemParams(M1=p.M1, M2=p.M2, w01=p.w01, w02=p.w02,
                        gamma=p.gamma, lam=lam)


def _with_damping(p: SystemParams, gt: float) -> SystemParams:
    return SystemParams(M1=p.M1, M2=p.M2, w01=p.w01, w02=p.w02,
                        gamma=gt * p.w01, lam=p.lam)


def _case_at(case: PresetCase, axis: str | None, value: float | None,
             cutoff_mult: float | None,
             explicit_cutoff: float | None) -> PresetCase:
    """Case with the sweep axis applied and the cutoff policy resolved."""
    p = case.params
    if axis == "lambda_tilde" and value is not None:
        p = _with_coupling(p, value)
    elif axis == "gamma_tilde" and value is not None:
        p = _with_damping(p, value)
    if cutoff_mult is not None:
        wc = default_cutoff(p, mult=cutoff_mult)
    elif explicit_cutoff is not None:
        wc = explicit_cutoff
    else:
        wc = default_cutoff(p)
    baths = BathSpec(T1=case.baths.T1, T2=case.baths.T2, omega_cutoff=wc)
    return PresetCase(name=case.name, params=p, baths=baths, init=case.init)


def _scrub(exc: BaseException) -> str:
    return " ".join(f"{type(exc).__name__}: {exc}".replace(",", ";").split())


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    return f"{float(v):.12g}"


def _emit(out_path: str | None, header: list, records: list,
          meta: list) -> None:
    lines = [_SCHEMA_LINE]
    lines += [f"# {m}" for m in meta]
    lines.append(",".join(header))
    for rec in records:
        lines.append(",".join(_cell(rec.get(col)) for col in header))
    text = "\n".join(lines) + "\n"
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _run_tasks(worker, tasks, threads: int) -> list:
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(worker, tasks))
    return [worker(t) for t in tasks]


# ------------------------------------------------------------ workers

def _steady_point(task) -> dict:
    (case, axis, value, rel_tol, steady_tol, errata, oracle,
     cutoff_mult, explicit_cutoff) = task
    c = _case_at(case, axis, value, cutoff_mult, explicit_cutoff)
    axis_col = value if value is not None else (
        normalized_coupling(c.params) if axis != "gamma_tilde"
        else c.params.gamma / c.params.w01)
    rec = {"case": c.name, axis or "lambda_tilde": axis_col}
    try:
        res = steady_state(c.params, c.baths, c.init,
                           steady_tol=steady_tol, rel_tol=rel_tol,
                           errata=errata)
        m = res.moments
        nm = normalize_moments(m.sigma1_sq, m.sigma2_sq, m.cov,
                               c.params, c.baths)
        rec.update(sigma1_norm=nm.sigma1_sq, sigma2_norm=nm.sigma2_sq,
                   cov_norm=nm.cov, residual=res.residual, error="")
        if oracle:
            sc = coupled_spectral_steady(c.params, c.baths)
            on = normalize_moments(sc.sigma1_sq, sc.sigma2_sq, sc.cov,
                                   c.params, c.baths)
            rec.update(oracle_sigma1_norm=on.sigma1_sq,
                       oracle_sigma2_norm=on.sigma2_sq,
                       oracle_cov_norm=on.cov)
    except DuobathError as exc:
        rec["error"] = _scrub(exc)
    return rec


def _evolve_point(task) -> dict:
    (case, t, f1, f2, rel_tol, errata, cutoff_mult, explicit_cutoff) = task
    c = _case_at(case, None, None, cutoff_mult, explicit_cutoff)
    rec = {"case": c.name, "t": t}
    try:
        traj = evolve(c.params, c.baths, c.init, [t], rel_tol=rel_tol,
                      errata=errata)
        m = traj.points[0]
        rec.update(sigma1_sq=m.sigma1_sq, sigma2_sq=m.sigma2_sq, cov=m.cov,
                   sigma1_norm=m.sigma1_sq / f1, sigma2_norm=m.sigma2_sq / f2,
                   cov_norm=m.cov / math.sqrt(f1 * f2), error="")
    except DuobathError as exc:
        rec["error"] = _scrub(exc)
    return rec


# ------------------------------------------------------------ commands

def cmd_modes(cfg: RunConfig) -> tuple:
    if cfg.axis == "gamma_tilde":
        raise ConfigError("modes sweeps lambda_tilde, not gamma_tilde")
    header = ["case", "lambda_tilde", "Omega1", "Omega2", "r1", "r2", "error"]
    records = []
    for case in cfg.cases:
        values = cfg.axis_values or (normalized_coupling(case.params),)
        for lt in values:
            p = _with_coupling(case.params, lt)
            rec = {"case": case.name, "lambda_tilde": lt}
            try:
                nm = normal_modes(p)
                rec.update(Omega1=nm.Omega1, Omega2=nm.Omega2,
                           r1=nm.r1, r2=nm.r2, error="")
            except DuobathError as exc:
                rec["error"] = _scrub(exc)
            records.append(rec)
    return header, records


def cmd_steady(cfg: RunConfig) -> tuple:
    axis = cfg.axis or "lambda_tilde"
    header = ["case", axis, "sigma1_norm", "sigma2_norm", "cov_norm",
              "residual"]
    if cfg.oracle:
        header += ["oracle_sigma1_norm", "oracle_sigma2_norm",
                   "oracle_cov_norm"]
    header.append("error")
    values = cfg.axis_values or (None,)
    tasks = [(case, cfg.axis, v, cfg.rel_tol, cfg.steady_tol, cfg.errata,
              cfg.oracle, cfg.cutoff_mult, cfg.explicit_cutoff)
             for case in cfg.cases for v in values]
    return header, _run_tasks(_steady_point, tasks, cfg.threads)


def cmd_evolve(cfg: RunConfig) -> tuple:
    if not cfg.times:
        raise ConfigError("evolve needs a [times] grid or an evolve preset")
    header = ["case", "t", "sigma1_sq", "sigma2_sq", "cov",
              "sigma1_norm", "sigma2_norm", "cov_norm", "error"]
    tasks = []
    for case in cfg.cases:
        p = case.params
        f1 = fdt_variance(p.M1, p.w01, p.gamma, case.baths.T1).sigma_sq
        f2 = fdt_variance(p.M2, p.w02, p.gamma, case.baths.T2).sigma_sq
        tasks += [(case, t, f1, f2, cfg.rel_tol, cfg.errata,
                   cfg.cutoff_mult, cfg.explicit_cutoff)
                  for t in cfg.times]
    return header, _run_tasks(_evolve_point, tasks, cfg.threads)


def cmd_fdt(cfg: RunConfig) -> tuple:
    header = ["case", "oscillator", "sigma_sq", "quad_error", "error"]
    records = []
    for case in cfg.cases:
        p = case.params
        for osc, (M, w0, T) in enumerate(
                ((p.M1, p.w01, case.baths.T1), (p.M2, p.w02, case.baths.T2)),
                start=1):
            rec = {"case": case.name, "oscillator": osc}
            try:
                r = fdt_variance(M, w0, p.gamma, T, rel_tol=cfg.rel_tol)
                rec.update(sigma_sq=r.sigma_sq, quad_error=r.error, error="")
            except DuobathError as exc:
                rec["error"] = _scrub(exc)
            records.append(rec)
    return header, records


# ------------------------------------------------------------ verify

def _by_case(records: list) -> dict:
    out = {}
    for r in records:
        out.setdefault(r["case"], []).append(r)
    return out


def _nearest(rows: list, key: str, value: float) -> dict:
    return min(rows, key=lambda r: abs(r[key] - value))


def _split(row) -> float:
    return abs(row["sigma1_norm"] - row["sigma2_norm"])


def _verify_fig1a(records):
    checks = []
    groups = _by_case(records)
    ok = all(r["r1"] * r["r2"] <= 1e-12 for r in records if not r["error"])
    checks.append(("mode ratios have opposite signs", ok, ""))
    pct1 = groups["pct1"]
    first, last = pct1[0], pct1[-1]
    ok = (abs(last["r1"] - 1.0) < 0.1 and abs(last["r2"] + 1.0) < 0.1
          and abs(last["r1"] - 1.0) < abs(first["r1"] - 1.0))
    checks.append(("near-identical pair approaches r1=1, r2=-1", ok,
                   f"r1={last['r1']:.4f} r2={last['r2']:.4f} at "
                   f"lt={last['lambda_tilde']:.3g}"))
    p = _with_coupling(PRESETS["fig1a"].cases[1].params, 1e-6)
    nm = normal_modes(p)
    ok = abs(nm.r1) < 1e-3 and abs(nm.r2) < 1e-3
    checks.append(("ratios vanish at negligible coupling", ok,
                   f"r1={nm.r1:.2e} r2={nm.r2:.2e}"))
    return checks


def _verify_fig1b(records):
    checks = []
    groups = _by_case(records)
    large = [r for r in groups["large"] if not r["error"]]
    weak = [r for r in large if r["lambda_tilde"] <= 0.1 + 1e-12]
    ok = all(0.99 <= r[k] <= 1.01 for r in weak
             for k in ("sigma1_norm", "sigma2_norm"))
    checks.append(("large mismatch keeps variances near equilibrium "
                   "for lt <= 0.1", ok,
                   " ".join(f"{r['sigma1_norm']:.4f}/{r['sigma2_norm']:.4f}"
                            for r in weak)))
    s_small = _split(_nearest(groups["pct1"], "lambda_tilde", 0.3))
    s_large = _split(_nearest(groups["large"], "lambda_tilde", 0.3))
    checks.append(("splitting at lt=0.3 shrinks with mismatch",
                   s_small > s_large, f"{s_small:.4g} > {s_large:.4g}"))
    for name, rows in groups.items():
        rows = [r for r in rows if not r["error"]]
        hi = _nearest(rows, "lambda_tilde", 0.95)
        mid = _nearest(rows, "lambda_tilde", 0.75)
        checks.append((f"{name}: variances grow toward critical coupling",
                       hi["sigma1_norm"] > mid["sigma1_norm"] > 0,
                       f"{mid['sigma1_norm']:.4g} -> {hi['sigma1_norm']:.4g}"))
        lo = _nearest(rows, "lambda_tilde", 0.05)
        mid = _nearest(rows, "lambda_tilde", 0.45)
        checks.append((f"{name}: covariance fades at weak coupling",
                       abs(lo["cov_norm"]) < abs(mid["cov_norm"]),
                       f"|{lo['cov_norm']:.3g}| < |{mid['cov_norm']:.3g}|"))
    return checks


def _verify_fig1c(records):
    checks = []
    for name, rows in _by_case(records).items():
        rows = [r for r in rows if not r["error"]]
        s_lo = _split(_nearest(rows, "gamma_tilde", 0.02))
        s_hi = _split(_nearest(rows, "gamma_tilde", 0.2))
        checks.append((f"{name}: splitting shrinks with damping",
                       s_hi < s_lo, f"{s_hi:.4g} < {s_lo:.4g}"))
    ident = _by_case(records)["identical"]
    ok = all(r["cov_norm"] > 0 for r in ident if not r["error"])
    checks.append(("identical pair keeps positive covariance", ok, ""))
    return checks


def _verify_evolve(records, preset):
    checks = []
    groups = _by_case(records)
    for case in preset.cases:
        rows = [r for r in groups[case.name] if not r["error"]]
        ok = all(r["cov"] ** 2 <= r["sigma1_sq"] * r["sigma2_sq"] * (1 + 1e-9)
                 for r in rows)
        checks.append((f"{case.name}: Cauchy-Schwarz at every time", ok, ""))
        first = rows[0]
        ok = (abs(first["sigma1_sq"] - case.init.sigma01_sq)
              < 0.05 * case.init.sigma01_sq
              and abs(first["sigma2_sq"] - case.init.sigma02_sq)
              < 0.05 * case.init.sigma02_sq)
        checks.append((f"{case.name}: spreads start at the initial values",
                       ok, f"t={first['t']:.3g}s"))
        a, b = rows[-2], rows[-1]
        ok = (abs(a["sigma1_norm"] - b["sigma1_norm"]) < 0.01 * b["sigma1_norm"]
              and abs(a["sigma2_norm"] - b["sigma2_norm"])
              < 0.01 * b["sigma2_norm"])
        checks.append((f"{case.name}: relaxation reaches a plateau", ok,
                       f"{b['sigma1_norm']:.4f}, {b['sigma2_norm']:.4f}"))
    if preset.name == "fig3a":
        ok = all(0.93 <= groups[c.name][-1][k] <= 1.07 for c in preset.cases
                 for k in ("sigma1_norm", "sigma2_norm"))
        checks.append(("equal cold baths land on the reference variances",
                       ok, " ".join(f"{groups[c.name][-1]['sigma1_norm']:.4f}"
                                    for c in preset.cases)))
    if preset.name == "fig3b":
        ok = all(groups[c.name][-1]["sigma1_norm"] > 1.005
                 for c in preset.cases)
        checks.append(("hot partner bath lifts the cold oscillator", ok, ""))
    return checks


def cmd_verify(cfg: RunConfig, preset_name: str, out_path: str | None) -> int:
    preset = get_preset(preset_name)
    if preset.kind == "modes":
        header, records = cmd_modes(cfg)
        checks = _verify_fig1a(records)
    elif preset.kind == "steady":
        header, records = cmd_steady(cfg)
        checks = (_verify_fig1b if preset.name == "fig1b"
                  else _verify_fig1c)(records)
    else:
        header, records = cmd_evolve(cfg)
        checks = _verify_evolve(records, preset)
    if out_path:
        _emit(out_path, header, records,
              ["command=verify", f"preset={preset_name}"])
    failed = 0
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]"
                                                       if detail else ""))
        failed += 0 if ok else 1
    row_errors = sum(1 for r in records if r.get("error"))
    if row_errors:
        print(f"FAIL  {row_errors} rows carry error annotations")
        failed += 1
    print(f"{preset_name}: {len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 2


# ------------------------------------------------------------ config

_KNOWN = {
    "system": {"m1", "m2", "w01", "w02", "gamma", "lam", "lambda_tilde"},
    "baths": {"t1", "t2", "omega_cutoff"},
    "initial": {"sigma01_sq", "sigma02_sq"},
    "sweep": {"axis", "min", "max", "points", "scale", "margin"},
    "times": {"min", "max", "points", "scale"},
    "tolerances": {"rel_tol", "steady_tol"},
    "output": {"oracle"},
}


def _grid(lo: float, hi: float, n: int, scale: str) -> tuple:
    if n < 1 or hi < lo:
        raise ConfigError("grid needs points >= 1 and max >= min")
    if scale == "log":
        if lo <= 0:
            raise ConfigError("log grid needs min > 0")
        return tuple(float(x) for x in np.geomspace(lo, hi, n))
    if scale == "linear":
        return tuple(float(x) for x in np.linspace(lo, hi, n))
    raise ConfigError(f"unknown grid scale {scale!r}")


def _parse_config(path: str) -> dict:
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    if not cp.read(path):
        raise ConfigError(f"cannot read config file {path!r}")
    for sec in cp.sections():
        if sec not in _KNOWN:
            raise ConfigError(f"unknown config section [{sec}]")
        for key in cp[sec]:
            if key not in _KNOWN[sec]:
                raise ConfigError(f"unknown key {key!r} in [{sec}]")

    def fget(sec, key, default=None):
        try:
            if cp.has_option(sec, key):
                return cp.getfloat(sec, key)
        except ValueError as exc:
            raise ConfigError(f"bad number for {sec}.{key}: {exc}")
        if default is None:
            raise ConfigError(f"missing required key {sec}.{key}")
        return default

    if "system" not in cp:
        raise ConfigError("config needs a [system] section")
    M1 = fget("system", "m1")
    M2 = fget("system", "m2")
    w01 = fget("system", "w01")
    w02 = fget("system", "w02")
    gamma = fget("system", "gamma")
    if cp.has_option("system", "lam") and cp.has_option("system",
                                                        "lambda_tilde"):
        raise ConfigError("give lam or lambda_tilde, not both")
    if cp.has_option("system", "lambda_tilde"):
        lam = (cp.getfloat("system", "lambda_tilde")
               * w01 * w02 * math.sqrt(M1 * M2))
    else:
        lam = fget("system", "lam", 0.0)
    try:
        params = SystemParams(M1=M1, M2=M2, w01=w01, w02=w02, gamma=gamma,
                              lam=lam)
    except (ValueError, DuobathError) as exc:
        raise ConfigError(f"bad [system] values: {exc}")

    explicit_cutoff = None
    if "baths" in cp:
        T1 = fget("baths", "t1")
        T2 = fget("baths", "t2")
        if cp.has_option("baths", "omega_cutoff"):
            explicit_cutoff = cp.getfloat("baths", "omega_cutoff")
    else:
        T1 = T2 = 300.0
    if "initial" in cp:
        init = InitialState(sigma01_sq=fget("initial", "sigma01_sq"),
                            sigma02_sq=fget("initial", "sigma02_sq"))
    else:
        from .presets import ground_spread
        init = InitialState(sigma01_sq=ground_spread(M1, w01),
                            sigma02_sq=ground_spread(M2, w02))

    axis = None
    axis_values = ()
    if "sweep" in cp:
        axis = cp.get("sweep", "axis", fallback="lambda_tilde").strip()
        if axis not in ("lambda_tilde", "gamma_tilde"):
            raise ConfigError(f"unknown sweep axis {axis!r}")
        margin = fget("sweep", "margin", 1e-3)
        lo = fget("sweep", "min")
        hi = fget("sweep", "max")
        n = int(fget("sweep", "points"))
        if axis == "lambda_tilde" and hi > 1.0 - margin:
            raise ConfigError(
                f"lambda_tilde sweep max {hi:g} exceeds 1 - margin "
                f"({1.0 - margin:g}); the model is unstable at lt >= 1")
        axis_values = _grid(lo, hi, n, cp.get("sweep", "scale",
                                              fallback="linear").strip())
    times = ()
    if "times" in cp:
        times = _grid(fget("times", "min"), fget("times", "max"),
                      int(fget("times", "points")),
                      cp.get("times", "scale", fallback="log").strip())

    baths = BathSpec(T1=T1, T2=T2,
                     omega_cutoff=(explicit_cutoff if explicit_cutoff
                                   else default_cutoff(params)))
    case = PresetCase(name="config", params=params, baths=baths, init=init)
    return {
        "cases": (case,),
        "axis": axis,
        "axis_values": axis_values,
        "times": times,
        "rel_tol": fget("tolerances", "rel_tol", 1e-9),
        "steady_tol": fget("tolerances", "steady_tol", 1e-3),
        "oracle": cp.getboolean("output", "oracle", fallback=False),
        "explicit_cutoff": explicit_cutoff,
    }


def _build_config(args) -> RunConfig:
    if args.preset and args.config:
        raise ConfigError("give --preset or --config, not both")
    if args.preset:
        pre = get_preset(args.preset)
        base = {
            "cases": pre.cases,
            "axis": pre.axis,
            "axis_values": pre.axis_values,
            "times": pre.times,
            "rel_tol": 1e-9,
            "steady_tol": 1e-3,
            "oracle": False,
            "explicit_cutoff": None,
        }
        source = args.preset
    elif args.config:
        base = _parse_config(args.config)
        source = args.config
    else:
        raise ConfigError("need --preset or --config")
    if args.rel_tol is not None:
        base["rel_tol"] = args.rel_tol
    if args.steady_tol is not None:
        base["steady_tol"] = args.steady_tol
    try:
        errata = parse_errata(args.errata) if args.errata else DEFAULT
    except ValueError as exc:
        raise ConfigError(str(exc))
    return RunConfig(cases=base["cases"], axis=base["axis"],
                     axis_values=base["axis_values"], times=base["times"],
                     rel_tol=base["rel_tol"], steady_tol=base["steady_tol"],
                     errata=errata, threads=max(1, args.threads),
                     oracle=base["oracle"] or args.oracle,
                     cutoff_mult=args.cutoff_mult,
                     explicit_cutoff=base["explicit_cutoff"], source=source)


# ------------------------------------------------------------ entry

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(1)


def _make_parser() -> _Parser:
    parser = _Parser(prog="duobath",
                     description="Gaussian dynamics of two coupled damped "
                                 "oscillators on separate thermal baths")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)
    for name, help_ in (("modes", "mode frequencies and ratios over a "
                                  "coupling sweep"),
                        ("evolve", "moments along a time grid"),
                        ("steady", "stationary moments over a sweep axis"),
                        ("fdt", "single-oscillator reference variances"),
                        ("verify", "regenerate a preset and check its "
                                   "qualitative features")):
        p = sub.add_parser(name, help=help_)
        if name == "verify":
            p.add_argument("preset_name", nargs="?", default=None,
                           help="preset to verify (or use --preset)")
        p.add_argument("--config", default=None, help="INI parameter file")
        p.add_argument("--preset", default=None,
                       help=f"figure preset ({', '.join(sorted(PRESETS))})")
        p.add_argument("--out", default=None,
                       help="output CSV path (default: stdout)")
        p.add_argument("--rel-tol", dest="rel_tol", type=float, default=None,
                       help="quadrature refinement target")
        p.add_argument("--steady-tol", dest="steady_tol", type=float,
                       default=None, help="steady-state residual target")
        p.add_argument("--cutoff-mult", dest="cutoff_mult", type=float,
                       default=None,
                       help="bath cutoff as a multiple of the fastest "
                            "frequency (default 400)")
        p.add_argument("--errata", default=None,
                       help="comma list of printed-form switches to enable")
        p.add_argument("--threads", type=int, default=1,
                       help="worker processes for sweep/grid points")
        p.add_argument("--oracle", action="store_true",
                       help="append spectral-oracle columns (steady only)")
    return parser


def main(argv=None) -> int:
    args = _make_parser().parse_args(argv)
    try:
        if args.command == "verify":
            preset_name = args.preset_name or args.preset
            if not preset_name:
                raise ConfigError("verify needs a preset name")
            args.preset = preset_name
            cfg = _build_config(args)
            return cmd_verify(cfg, preset_name, args.out)
        cfg = _build_config(args)
        header, records = {
            "modes": cmd_modes,
            "evolve": cmd_evolve,
            "steady": cmd_steady,
            "fdt": cmd_fdt,
        }[args.command](cfg)
    except ConfigError as exc:
        sys.stderr.write(f"duobath: {exc}\n")
        return 1
    _emit(args.out, header, records,
          [f"command={args.command}", f"source={cfg.source}"])
    return 2 if any(r.get("error") for r in records) else 0


if __name__ == "__main__":
    sys.exit(main())
