"""Quaternionic integral representation formulas.

Thin package wrapper around the compiled extension. The heavy lifting
(kernel quadrature, slice transforms, experiment reports) lives in C++;
this module re-exports the bound surface.
"""

from ._qint import (
    Quat,
    commands,
    corpus_names,
    cr_residual,
    from_slice,
    line_cauchy_residual,
    margin_ball,
    qexp,
    qlog,
    render_csv,
    render_json,
    reproduce_residual,
    run,
    slice_coord,
    theta_period_error,
)

__all__ = [
    "Quat",
    "commands",
    "corpus_names",
    "cr_residual",
    "from_slice",
    "line_cauchy_residual",
    "margin_ball",
    "qexp",
    "qlog",
    "render_csv",
    "render_json",
    "reproduce_residual",
    "run",
    "slice_coord",
    "theta_period_error",
]
