"""Figure regeneration for shellmodes experiment outputs.

Reads the dispersion/sweep CSVs and the prediction record JSON written by
the shellmodes CLI and redraws the benchmark figure kinds.  This package
never imports the solver; files are its only interface.
"""

__version__ = "0.1.0"

from .figures import FigureSpec, plot
from .schema import (
    SchemaMismatch,
    read_dispersion_csv,
    read_prediction_record,
    read_sweep_summary,
    write_dispersion_csv,
    write_sweep_summary,
)
