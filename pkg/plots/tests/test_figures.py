import json
from pathlib import Path

import pytest

from shellplots import FigureSpec, SchemaMismatch, plot
from shellplots.cli import main


def dispersion_csvs(out_dir: Path):
    return tuple(sorted(str(p) for p in out_dir.glob("dispersion_h*.csv")))


def test_figures_from_real_sweeps(cylinder_outputs, barrel_outputs, tmp_path):
    # the four benchmark figure kinds, drawn from the CLI's own outputs
    record = json.loads((barrel_outputs / "prediction.json").read_text())
    cyl_record = json.loads((cylinder_outputs / "prediction.json").read_text())

    disp = plot(
        FigureSpec(
            kind="dispersion",
            csv_paths=dispersion_csvs(barrel_outputs),
            output_path=str(tmp_path / "dispersion.png"),
        )
    )
    k_fig = plot(
        FigureSpec(
            kind="k_vs_h",
            csv_paths=(str(cylinder_outputs / "sweep_summary.csv"),),
            prediction_path=str(cylinder_outputs / "prediction.json"),
            output_path=str(tmp_path / "k_vs_h.png"),
        )
    )
    lam_fig = plot(
        FigureSpec(
            kind="lambda_vs_h",
            csv_paths=(str(barrel_outputs / "sweep_summary.csv"),),
            prediction_path=str(barrel_outputs / "prediction.json"),
            output_path=str(tmp_path / "lambda_vs_h.png"),
        )
    )
    res_fig = plot(
        FigureSpec(
            kind="residual",
            csv_paths=(str(barrel_outputs / "sweep_summary.csv"),),
            prediction_path=str(barrel_outputs / "prediction.json"),
            output_path=str(tmp_path / "residual.png"),
        )
    )

    for result in (disp, k_fig, lam_fig, res_fig):
        data = Path(result.path).read_bytes()
        assert data[:8] == b"\x89PNG\r\n\x1a\n" and len(data) > 1000

    # asymptote parameters are exactly the prediction-record values
    assert k_fig.asymptote["k_gamma"] == cyl_record["k_gamma"]
    assert k_fig.asymptote["k_exponent"] == cyl_record["k_exponent"]
    assert lam_fig.asymptote["a0"] == record["a0"]
    assert lam_fig.asymptote["a1"] == record["a1"]
    assert lam_fig.asymptote["lambda_exponent"] == record["lambda_exponent"]
    assert res_fig.asymptote["residual_exponent"] == 2.0 * record["lambda_exponent"]
    print("criterion 12 PASS: four figures drawn with record-sourced asymptotes")


def test_plot_is_read_only_and_deterministic(barrel_outputs, tmp_path):
    summary = barrel_outputs / "sweep_summary.csv"
    before = summary.read_bytes()
    spec_a = FigureSpec(
        kind="lambda_vs_h",
        csv_paths=(str(summary),),
        prediction_path=str(barrel_outputs / "prediction.json"),
        output_path=str(tmp_path / "a.png"),
    )
    spec_b = FigureSpec(
        kind="lambda_vs_h",
        csv_paths=(str(summary),),
        prediction_path=str(barrel_outputs / "prediction.json"),
        output_path=str(tmp_path / "b.png"),
    )
    plot(spec_a)
    plot(spec_b)
    assert summary.read_bytes() == before
    assert (tmp_path / "a.png").read_bytes() == (tmp_path / "b.png").read_bytes()


def test_missing_column_raises_schema_mismatch(barrel_outputs, tmp_path):
    broken = tmp_path / "broken.csv"
    lines = (barrel_outputs / "sweep_summary.csv").read_text().splitlines()
    broken.write_text("\n".join(",".join(ln.split(",")[:-1]) for ln in lines) + "\n")
    with pytest.raises(SchemaMismatch):
        plot(
            FigureSpec(
                kind="lambda_vs_h",
                csv_paths=(str(broken),),
                prediction_path=str(barrel_outputs / "prediction.json"),
                output_path=str(tmp_path / "x.png"),
            )
        )


def test_plate_record_has_no_k_law(tmp_path, barrel_outputs):
    record = {
        "class": "plate",
        "a0": 0.0,
        "a1": 4.8e9,
        "lambda_exponent": 2.0,
        "k_gamma": None,
        "k_exponent": None,
    }
    pred = tmp_path / "plate.json"
    pred.write_text(json.dumps(record))
    with pytest.raises(SchemaMismatch):
        plot(
            FigureSpec(
                kind="k_vs_h",
                csv_paths=(str(barrel_outputs / "sweep_summary.csv"),),
                prediction_path=str(pred),
                output_path=str(tmp_path / "x.png"),
            )
        )


def test_cli_draws_figure(cylinder_outputs, tmp_path, capsys):
    out = tmp_path / "cli.png"
    rc = main(
        [
            "k_vs_h",
            str(cylinder_outputs / "sweep_summary.csv"),
            "--pred",
            str(cylinder_outputs / "prediction.json"),
            "-o",
            str(out),
        ]
    )
    assert rc == 0
    assert out.exists()
    assert str(out) in capsys.readouterr().out


def test_cli_rejects_missing_prediction(tmp_path, capsys):
    rc = main(["k_vs_h", "whatever.csv", "-o", str(tmp_path / "x.png")])
    assert rc == 1
    assert "error" in capsys.readouterr().err
