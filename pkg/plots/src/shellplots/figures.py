"""The four benchmark figure kinds, redrawn from CSV/JSON outputs.

dispersion   -- first eigenvalue against the angular index, one curve per
                thickness (log10 ordinate);
k_vs_h       -- loglog angular argmin against thickness with the
                gamma * eps^(-beta) asymptote;
lambda_vs_h  -- loglog (lambda* - a0) against thickness with the
                a1 * eps^delta asymptote;
residual     -- loglog law residual lambda* - a0 - a1 * eps^delta with a
                reference line of twice the law exponent.

Asymptote lines always come from the prediction record: slopes are the
record exponents, never fitted, so a figure visibly tests the law instead
of hiding it.  Styles are fixed; regenerating a figure reproduces it
byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .schema import (
    SchemaMismatch,
    read_dispersion_csv,
    read_prediction_record,
    read_sweep_summary,
)

KINDS = ("dispersion", "k_vs_h", "lambda_vs_h", "residual")

_RC = {
    "figure.figsize": (6.4, 4.4),
    "figure.dpi": 110,
    "savefig.dpi": 110,
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
}


@dataclass(frozen=True)
class FigureSpec:
    """What to draw: input files, figure kind, output image path.

    ``prediction_path`` points to the record whose parameters feed the
    asymptote line (required for every kind except ``dispersion``).
    """

    kind: str
    csv_paths: tuple[str, ...]
    output_path: str
    prediction_path: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}; pick from {KINDS}")
        if not self.csv_paths:
            raise ValueError("need at least one input CSV")
        if self.kind != "dispersion" and self.prediction_path is None:
            raise ValueError(f"kind {self.kind!r} needs a prediction record")


@dataclass(frozen=True)
class FigureResult:
    path: str
    asymptote: dict = field(default_factory=dict)


def _norm_scale(record) -> float:
    mat = record.get("material", {})
    if mat.get("E") and mat.get("rho"):
        return mat["rho"] / mat["E"]
    return 1.0


def _h_label(path: str) -> str:
    stem = Path(path).stem
    return stem.split("_h")[-1] if "_h" in stem else stem


def _plot_dispersion(ax, spec: FigureSpec) -> dict:
    for path in spec.csv_paths:
        data = read_dispersion_csv(path)
        ax.plot(data.ks, np.log10(data.lams), marker="o", ms=3, label=f"h = {_h_label(path)}")
        ax.plot(data.argmin_k, np.log10(data.lam_star), "k*", ms=9)
    ax.set_xlabel("angular index k")
    ax.set_ylabel("log10 first eigenvalue")
    ax.legend()
    return {}


def _sweep_arrays(spec: FigureSpec):
    rows = read_sweep_summary(spec.csv_paths[0])
    for extra in spec.csv_paths[1:]:
        rows = rows + read_sweep_summary(extra)
    order = np.argsort([r.h for r in rows])[::-1]
    return [rows[i] for i in order]


def _plot_k_vs_h(ax, spec: FigureSpec) -> dict:
    rows = _sweep_arrays(spec)
    record = read_prediction_record(spec.prediction_path)
    gamma, beta = record["k_gamma"], record["k_exponent"]
    if gamma is None or beta is None:
        raise SchemaMismatch("prediction record has no angular-frequency law")
    h = np.array([r.h for r in rows])
    k = np.array([r.k_star for r in rows])
    ax.loglog(h, np.maximum(k, 0.5), "o", label="computed argmin")
    ax.loglog(h, gamma * (h / 2.0) ** (-beta), "-", label=f"{gamma:.5g} eps^(-{beta:.4g})")
    ax.set_xlabel("thickness h = 2 eps")
    ax.set_ylabel("angular frequency of the first mode")
    ax.legend()
    return {"k_gamma": gamma, "k_exponent": beta}


def _plot_lambda_vs_h(ax, spec: FigureSpec) -> dict:
    rows = _sweep_arrays(spec)
    record = read_prediction_record(spec.prediction_path)
    a0, a1, delta = record["a0"], record["a1"], record["lambda_exponent"]
    if a1 is None or delta is None:
        raise SchemaMismatch("prediction record has no eigenvalue law")
    scale = _norm_scale(record)
    h = np.array([r.h for r in rows])
    lam = np.array([r.lam_star for r in rows])
    ax.loglog(h, (lam - a0) * scale, "o", label="computed (minus the floor)")
    ax.loglog(h, a1 * (h / 2.0) ** delta * scale, "-", label=f"a1 eps^{delta:.4g}")
    ax.set_xlabel("thickness h = 2 eps")
    ax.set_ylabel("(lambda - a0) rho / E")
    ax.legend()
    return {"a0": a0, "a1": a1, "lambda_exponent": delta}


def _plot_residual(ax, spec: FigureSpec) -> dict:
    rows = _sweep_arrays(spec)
    record = read_prediction_record(spec.prediction_path)
    a0, a1, delta = record["a0"], record["a1"], record["lambda_exponent"]
    if a1 is None or delta is None:
        raise SchemaMismatch("prediction record has no eigenvalue law")
    scale = _norm_scale(record)
    kept = [r for r in rows if r.law_residual is not None and r.law_residual > 0]
    if not kept:
        raise SchemaMismatch("no positive law residuals to plot")
    h = np.array([r.h for r in kept])
    res = np.array([r.law_residual for r in kept])
    ax.loglog(h, res * scale, "o", label="lambda - a0 - a1 eps^delta")
    ref_exp = 2.0 * delta  # next-order term carries twice the law exponent
    ref = res[0] * (h / h[0]) ** ref_exp
    ax.loglog(h, ref * scale, "--", label=f"slope {ref_exp:.4g} reference")
    ax.set_xlabel("thickness h = 2 eps")
    ax.set_ylabel("law residual (rho / E)")
    ax.legend()
    return {"a0": a0, "a1": a1, "lambda_exponent": delta, "residual_exponent": ref_exp}


_DRAWERS = {
    "dispersion": _plot_dispersion,
    "k_vs_h": _plot_k_vs_h,
    "lambda_vs_h": _plot_lambda_vs_h,
    "residual": _plot_residual,
}


def plot(spec: FigureSpec) -> FigureResult:
    """Draw one figure; returns the output path and the asymptote
    parameters actually used (verbatim from the prediction record)."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        try:
            asymptote = _DRAWERS[spec.kind](ax, spec)
            fig.tight_layout()
            fig.savefig(spec.output_path, metadata={"Software": "shellplots"})
        finally:
            plt.close(fig)
    return FigureResult(path=spec.output_path, asymptote=asymptote)
