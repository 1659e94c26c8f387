"""Parsers and writers for the shellmodes output file formats.

Dispersion CSV: header ``k,lambda,lambda_norm,residual``, integer-k rows,
and a final ``argmin,<k*>,<lambda*>,<lambda_norm*>`` footer.

Sweep summary CSV: header ``h,eps,k_star,lambda_star,lambda_star_norm,
k_pred,lambda_pred,lambda_pred_norm,law_residual,law_residual_norm``;
prediction columns may be empty when no law applies.

Prediction record: JSON with the asymptote parameters (a0, a1,
lambda_exponent, k_gamma, k_exponent) and their normalized variants.

Writers mirror the parsers field for field, so parse -> write round-trips
byte-identically; every parse failure raises :class:`SchemaMismatch`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

DISPERSION_HEADER = "k,lambda,lambda_norm,residual"
SWEEP_HEADER = (
    "h,eps,k_star,lambda_star,lambda_star_norm,"
    "k_pred,lambda_pred,lambda_pred_norm,law_residual,law_residual_norm"
)
_FMT = ".12g"


class SchemaMismatch(Exception):
    """File does not conform to the expected shellmodes output schema."""


@dataclass(frozen=True)
class DispersionData:
    ks: tuple[int, ...]
    lams: tuple[float, ...]
    lams_norm: tuple[float, ...]
    residuals: tuple[float, ...]
    argmin_k: int
    lam_star: float
    lam_star_norm: float


@dataclass(frozen=True)
class SweepRow:
    h: float
    eps: float
    k_star: int
    lam_star: float
    lam_star_norm: float
    k_pred: float | None
    lam_pred: float | None
    lam_pred_norm: float | None
    law_residual: float | None
    law_residual_norm: float | None


def _float(cell: str, where: str) -> float:
    try:
        return float(cell)
    except ValueError as exc:
        raise SchemaMismatch(f"{where}: expected a number, got {cell!r}") from exc


def _opt(cell: str, where: str) -> float | None:
    return None if cell == "" else _float(cell, where)


def read_dispersion_csv(path) -> DispersionData:
    lines = Path(path).read_text().strip().splitlines()
    if not lines or lines[0] != DISPERSION_HEADER:
        raise SchemaMismatch(f"{path}: missing dispersion header {DISPERSION_HEADER!r}")
    if len(lines) < 3 or not lines[-1].startswith("argmin,"):
        raise SchemaMismatch(f"{path}: missing argmin footer")
    ks, lams, norms, residuals = [], [], [], []
    for ln, line in enumerate(lines[1:-1], start=2):
        cells = line.split(",")
        if len(cells) != 4:
            raise SchemaMismatch(f"{path}:{ln}: expected 4 columns, got {len(cells)}")
        try:
            ks.append(int(cells[0]))
        except ValueError as exc:
            raise SchemaMismatch(f"{path}:{ln}: bad mode index {cells[0]!r}") from exc
        lams.append(_float(cells[1], f"{path}:{ln}"))
        norms.append(_float(cells[2], f"{path}:{ln}"))
        residuals.append(_float(cells[3], f"{path}:{ln}"))
    footer = lines[-1].split(",")
    if len(footer) != 4:
        raise SchemaMismatch(f"{path}: malformed argmin footer")
    return DispersionData(
        tuple(ks),
        tuple(lams),
        tuple(norms),
        tuple(residuals),
        int(footer[1]),
        _float(footer[2], f"{path}: footer"),
        _float(footer[3], f"{path}: footer"),
    )


def write_dispersion_csv(path, data: DispersionData) -> None:
    out = [DISPERSION_HEADER]
    for k, lam, nrm, res in zip(data.ks, data.lams, data.lams_norm, data.residuals):
        out.append(
            f"{k},{format(lam, _FMT)},{format(nrm, _FMT)},{format(res, _FMT)}"
        )
    out.append(
        f"argmin,{data.argmin_k},{format(data.lam_star, _FMT)},"
        f"{format(data.lam_star_norm, _FMT)}"
    )
    Path(path).write_text("\n".join(out) + "\n")


def read_sweep_summary(path) -> tuple[SweepRow, ...]:
    lines = Path(path).read_text().strip().splitlines()
    if not lines or lines[0] != SWEEP_HEADER:
        raise SchemaMismatch(f"{path}: missing sweep header")
    rows = []
    for ln, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != 10:
            raise SchemaMismatch(f"{path}:{ln}: expected 10 columns, got {len(cells)}")
        where = f"{path}:{ln}"
        try:
            k_star = int(cells[2])
        except ValueError as exc:
            raise SchemaMismatch(f"{where}: bad k_star {cells[2]!r}") from exc
        rows.append(
            SweepRow(
                _float(cells[0], where),
                _float(cells[1], where),
                k_star,
                _float(cells[3], where),
                _float(cells[4], where),
                _opt(cells[5], where),
                _opt(cells[6], where),
                _opt(cells[7], where),
                _opt(cells[8], where),
                _opt(cells[9], where),
            )
        )
    if not rows:
        raise SchemaMismatch(f"{path}: no sweep rows")
    return tuple(rows)


def write_sweep_summary(path, rows) -> None:
    def cell(v):
        return "" if v is None else format(v, _FMT)

    out = [SWEEP_HEADER]
    for r in rows:
        out.append(
            ",".join(
                [
                    format(r.h, _FMT),
                    format(r.eps, _FMT),
                    str(r.k_star),
                    format(r.lam_star, _FMT),
                    format(r.lam_star_norm, _FMT),
                    cell(r.k_pred),
                    cell(r.lam_pred),
                    cell(r.lam_pred_norm),
                    cell(r.law_residual),
                    cell(r.law_residual_norm),
                ]
            )
        )
    Path(path).write_text("\n".join(out) + "\n")


_PREDICTION_KEYS = ("class", "a0", "a1", "lambda_exponent", "k_gamma", "k_exponent")


def read_prediction_record(path) -> dict:
    try:
        rec = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaMismatch(f"{path}: invalid JSON: {exc}") from exc
    missing = [key for key in _PREDICTION_KEYS if key not in rec]
    if missing:
        raise SchemaMismatch(f"{path}: prediction record misses {missing}")
    return rec
