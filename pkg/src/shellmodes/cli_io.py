"""Command-line driver: configuration parsing and CSV/JSON outputs.

Subcommands: classify | predict | dispersion | sweep | constants.
Exit codes: 0 success, 2 configuration error, 3 numerical failure.

The configuration is a YAML file; thicknesses are entered as the physical
thickness h (the plotting convention) and converted once to the
half-thickness eps = h/2 at parse time.  Eigenvalues are reported both raw
(rad/s)^2 and normalized by E/rho.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import yaml

from .asymptotics import (
    AsymptoticPrediction,
    airy_first_zero,
    clamped_beam_constant,
    clamped_beam_root,
    predict,
)
from .dispersion import (
    DispersionCurve,
    KPolicy,
    MeshSpec,
    first_mode,
    sweep_k,
)
from .errors import ConfigError, NotApplicable, ShellError
from .geometry import (
    CYLINDER,
    RING_PLATE,
    MeridianProfile,
    classify,
    injectivity_bound,
)
from .operators import LAME, LAPLACE, MaterialParams, membrane_limit

_FLOAT_FMT = ".12g"


@dataclass(frozen=True)
class ExperimentConfig:
    profile: MeridianProfile
    material: MaterialParams
    operator: str
    eps_values: tuple[float, ...]  # half-thicknesses, from the h entries
    mesh: MeshSpec = MeshSpec()
    p: int = 6
    k_policy: KPolicy = KPolicy()
    eigen_m: int = 1
    eigen_tol: float = 1e-9
    output_dir: str = "out"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConfigError(msg)


def _get(d: dict, key: str, where: str):
    if key not in d:
        raise ConfigError(f"missing field {key!r} in {where}")
    return d[key]


def _parse_profile(spec) -> MeridianProfile:
    _require(isinstance(spec, dict), "profile: expected a mapping")
    kind = str(_get(spec, "kind", "profile")).lower()
    try:
        if kind == "cylinder":
            return MeridianProfile.cylinder(
                float(_get(spec, "R", "profile")), float(_get(spec, "L", "profile"))
            )
        if kind in ("ring_plate", "plate"):
            return MeridianProfile.ring_plate(
                float(_get(spec, "R1", "profile")), float(_get(spec, "R2", "profile"))
            )
        if kind == "parametrized":
            return MeridianProfile.parametrized(
                _get(spec, "coefficients", "profile"),
                _get(spec, "interval", "profile"),
            )
    except (ShellError, TypeError, ValueError) as exc:
        raise ConfigError(f"profile: {exc}") from exc
    raise ConfigError(f"profile.kind: unknown kind {kind!r}")


def parse_config(source) -> ExperimentConfig:
    """Build an :class:`ExperimentConfig` from a YAML path, stream or dict."""
    if isinstance(source, dict):
        raw = source
    else:
        text = Path(source).read_text() if isinstance(source, (str, Path)) else source.read()
        try:
            raw = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise ConfigError(f"invalid YAML: {exc}") from exc
    _require(isinstance(raw, dict), "top level: expected a mapping")

    profile = _parse_profile(_get(raw, "profile", "config"))
    mat = _get(raw, "material", "config")
    _require(isinstance(mat, dict), "material: expected a mapping")
    try:
        material = MaterialParams(
            float(_get(mat, "E", "material")),
            float(_get(mat, "nu", "material")),
            float(_get(mat, "rho", "material")),
        )
    except (ShellError, ValueError) as exc:
        raise ConfigError(f"material: {exc}") from exc

    operator = str(_get(raw, "operator", "config")).lower()
    _require(operator in (LAPLACE, LAME), f"operator: must be laplace or lame, got {operator!r}")

    thickness = _get(raw, "thickness", "config")
    _require(
        isinstance(thickness, (list, tuple)) and len(thickness) > 0,
        "thickness: expected a non-empty list of h values",
    )
    bound = injectivity_bound(profile)
    eps_values = []
    for h in thickness:
        h = float(h)
        _require(h > 0, f"thickness: h values must be positive, got {h}")
        eps = h / 2.0
        _require(
            eps < bound,
            f"thickness: h={h} gives eps={eps} at or beyond the injectivity bound {bound:g}",
        )
        eps_values.append(eps)

    mesh_raw = raw.get("mesh", {})
    _require(isinstance(mesh_raw, dict), "mesh: expected a mapping")
    mesh = MeshSpec(
        n_thick=int(mesh_raw.get("n_thick", 2)),
        n_merid=int(mesh_raw.get("n_merid", 8)),
        geo_degree=int(mesh_raw.get("geo_degree", 3)),
        graded=bool(mesh_raw.get("graded", False)),
    )
    pol_raw = raw.get("k_policy", {})
    _require(isinstance(pol_raw, dict), "k_policy: expected a mapping")
    policy = KPolicy(
        window=int(pol_raw.get("window", 5)), cap=int(pol_raw.get("cap", 200))
    )
    eig_raw = raw.get("eigen", {})
    _require(isinstance(eig_raw, dict), "eigen: expected a mapping")

    return ExperimentConfig(
        profile=profile,
        material=material,
        operator=operator,
        eps_values=tuple(eps_values),
        mesh=mesh,
        p=int(raw.get("p", 6)),
        k_policy=policy,
        eigen_m=int(eig_raw.get("m", 1)),
        eigen_tol=float(eig_raw.get("tol", 1e-9)),
        output_dir=str(raw.get("output_dir", "out")),
    )


def config_to_dict(cfg: ExperimentConfig) -> dict:
    prof = cfg.profile
    if prof.kind == CYLINDER:
        profile = {"kind": "cylinder", "R": prof.coeffs[0], "L": prof.span}
    elif prof.kind == RING_PLATE:
        profile = {"kind": "ring_plate", "R1": prof.interval[0], "R2": prof.interval[1]}
    else:
        profile = {
            "kind": "parametrized",
            "coefficients": list(prof.coeffs),
            "interval": list(prof.interval),
        }
    return {
        "profile": profile,
        "material": {"E": cfg.material.E, "nu": cfg.material.nu, "rho": cfg.material.rho},
        "operator": cfg.operator,
        "thickness": [2.0 * e for e in cfg.eps_values],
        "mesh": {
            "n_thick": cfg.mesh.n_thick,
            "n_merid": cfg.mesh.n_merid,
            "geo_degree": cfg.mesh.geo_degree,
            "graded": cfg.mesh.graded,
        },
        "p": cfg.p,
        "k_policy": {"window": cfg.k_policy.window, "cap": cfg.k_policy.cap},
        "eigen": {"m": cfg.eigen_m, "tol": cfg.eigen_tol},
        "output_dir": cfg.output_dir,
    }


def print_config(cfg: ExperimentConfig) -> str:
    """YAML text that parses back to an identical configuration."""
    return yaml.safe_dump(config_to_dict(cfg), sort_keys=False)


# -- outputs -----------------------------------------------------------------


def _fmt(x) -> str:
    return format(float(x), _FLOAT_FMT)


def _norm_scale(cfg: ExperimentConfig) -> float:
    if cfg.operator == LAME:
        return cfg.material.rho / cfg.material.E
    return 1.0


def write_dispersion_csv(stream, curve: DispersionCurve, cfg: ExperimentConfig) -> None:
    """Columns k, lambda, lambda_norm, residual; footer row with the argmin."""
    scale = _norm_scale(cfg)
    stream.write("k,lambda,lambda_norm,residual\n")
    for k, lam, res in zip(curve.ks, curve.lams, curve.residuals):
        stream.write(f"{int(k)},{_fmt(lam)},{_fmt(lam * scale)},{_fmt(res)}\n")
    k_star, lam_star = first_mode(curve)
    stream.write(f"argmin,{k_star},{_fmt(lam_star)},{_fmt(lam_star * scale)}\n")


SWEEP_HEADER = (
    "h,eps,k_star,lambda_star,lambda_star_norm,"
    "k_pred,lambda_pred,lambda_pred_norm,law_residual,law_residual_norm\n"
)


def sweep_row_text(
    cfg: ExperimentConfig,
    eps: float,
    k_star: int,
    lam_star: float,
    prediction: Optional[AsymptoticPrediction],
) -> str:
    scale = _norm_scale(cfg)
    cells = [_fmt(2.0 * eps), _fmt(eps), str(int(k_star)), _fmt(lam_star), _fmt(lam_star * scale)]
    if prediction is not None and prediction.a1 is not None:
        k_pred = (
            _fmt(prediction.k_at(eps)) if prediction.k_gamma is not None else ""
        )
        lam_pred = prediction.lambda_at(eps)
        resid = lam_star - lam_pred
        cells += [k_pred, _fmt(lam_pred), _fmt(lam_pred * scale), _fmt(resid), _fmt(resid * scale)]
    else:
        cells += ["", "", "", "", ""]
    return ",".join(cells) + "\n"


def prediction_record(pred: AsymptoticPrediction) -> dict:
    rec = {
        "class": pred.shell_class.tag,
        "a0": pred.a0,
        "a0_norm": pred.a0_normalized,
        "a1": pred.a1,
        "a1_norm": pred.a1_normalized,
        "lambda_exponent": pred.lambda_exponent,
        "k_gamma": pred.k_gamma,
        "k_exponent": pred.k_exponent,
        "coefficients_unavailable": pred.coefficients_unavailable,
        "material": {
            "E": pred.material.E,
            "nu": pred.material.nu,
            "rho": pred.material.rho,
        },
        "constants": dict(pred.extras),
    }
    if pred.shell_class.z0:
        rec["z0"] = list(pred.shell_class.z0)
    return rec


# -- commands ----------------------------------------------------------------


def cmd_classify(cfg: ExperimentConfig, out=None) -> int:
    out = out or sys.stdout
    cls = classify(cfg.profile)
    out.write(f"class: {cls.tag}\n")
    if cls.z0:
        out.write("z0: " + ", ".join(_fmt(z) for z in cls.z0) + "\n")
    if cls.h0_min is not None:
        out.write(f"h0_min_norm: {_fmt(cls.h0_min)}\n")
        out.write(f"h0_min: {_fmt(cls.h0_min * cfg.material.E / cfg.material.rho)}\n")
    try:
        lim = membrane_limit(cls)
        out.write(f"membrane_limit_norm: {_fmt(lim)}\n")
        out.write(f"membrane_limit: {_fmt(lim * cfg.material.E / cfg.material.rho)}\n")
    except NotApplicable:
        out.write("membrane_limit: not applicable\n")
    return 0


def cmd_predict(cfg: ExperimentConfig, record_path: Optional[str] = None, out=None) -> int:
    out = out or sys.stdout
    pred = predict(cfg.profile, cfg.material)
    rec = prediction_record(pred)
    text = json.dumps(rec, indent=2, sort_keys=True)
    if record_path:
        Path(record_path).write_text(text + "\n")
    out.write(text + "\n")
    return 0


def cmd_dispersion(cfg: ExperimentConfig, h: float, csv_path: Optional[str] = None, out=None) -> int:
    out = out or sys.stdout
    eps = float(h) / 2.0
    curve = sweep_k(
        cfg.profile,
        cfg.material,
        cfg.operator,
        eps,
        cfg.mesh,
        cfg.p,
        cfg.k_policy,
        cfg.eigen_m,
        cfg.eigen_tol,
    )
    if csv_path:
        with open(csv_path, "w") as fh:
            write_dispersion_csv(fh, curve, cfg)
    else:
        write_dispersion_csv(out, curve, cfg)
    return 0


def cmd_sweep(cfg: ExperimentConfig, out_dir: Optional[str] = None, out=None) -> int:
    """One dispersion CSV per thickness plus a summary CSV; partial results
    stay on disk if a later thickness fails."""
    out = out or sys.stdout
    directory = Path(out_dir or cfg.output_dir)
    directory.mkdir(parents=True, exist_ok=True)
    try:
        pred = predict(cfg.profile, cfg.material)
        (directory / "prediction.json").write_text(
            json.dumps(prediction_record(pred), indent=2, sort_keys=True) + "\n"
        )
    except ShellError:
        pred = None

    eps_values = sorted(cfg.eps_values, reverse=True)
    summary = directory / "sweep_summary.csv"
    with open(summary, "w") as fh:
        fh.write(SWEEP_HEADER)
        fh.flush()
        for eps in eps_values:
            curve = sweep_k(
                cfg.profile,
                cfg.material,
                cfg.operator,
                eps,
                cfg.mesh,
                cfg.p,
                cfg.k_policy,
                cfg.eigen_m,
                cfg.eigen_tol,
            )
            with open(directory / f"dispersion_h{2 * eps:g}.csv", "w") as dfh:
                write_dispersion_csv(dfh, curve, cfg)
            k_star, lam_star = first_mode(curve)
            fh.write(sweep_row_text(cfg, eps, k_star, lam_star, pred))
            fh.flush()
    out.write(f"wrote {summary}\n")
    return 0


def cmd_constants(out=None) -> int:
    out = out or sys.stdout
    out.write(f"clamped_beam_root: {clamped_beam_root():.10f}\n")
    out.write(f"clamped_beam_constant: {clamped_beam_constant():.7f}\n")
    out.write(f"airy_first_zero: {airy_first_zero():.10f}\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shellmodes",
        description="Thin axisymmetric shell eigenmodes: dispersion sweeps and asymptotic laws",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="report the shell class of the configured profile")
    p_classify.add_argument("config")

    p_predict = sub.add_parser("predict", help="closed-form asymptotic prediction")
    p_predict.add_argument("config")
    p_predict.add_argument("-o", "--output", help="write the prediction record JSON here")

    p_disp = sub.add_parser("dispersion", help="one dispersion curve at thickness h")
    p_disp.add_argument("config")
    p_disp.add_argument("--h", type=float, required=True, help="physical thickness h = 2*eps")
    p_disp.add_argument("-o", "--output", help="CSV output path (default: stdout)")

    p_sweep = sub.add_parser("sweep", help="dispersion sweep over all configured thicknesses")
    p_sweep.add_argument("config")
    p_sweep.add_argument("-d", "--out-dir", help="output directory (default from config)")

    sub.add_parser("constants", help="print the derived special constants")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "constants":
            return cmd_constants()
        cfg = parse_config(args.config)
        if args.command == "classify":
            return cmd_classify(cfg)
        if args.command == "predict":
            return cmd_predict(cfg, args.output)
        if args.command == "dispersion":
            return cmd_dispersion(cfg, args.h, args.output)
        if args.command == "sweep":
            return cmd_sweep(cfg, args.out_dir)
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ShellError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
