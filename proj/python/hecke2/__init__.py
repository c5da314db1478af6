"""Exact characteristic-2 kernels: GF(2) polynomials, the C_n recurrence,
kernel spaces of U+I, and Hecke operators on q-expansions."""

from ._core import (
    BitPoly,
    QSeries,
    PrecisionError,
    a_seq,
    adapted_grid,
    agree,
    alpha_apply,
    c_seq,
    check_u3_equals_u,
    degree_law_check,
    express_c4m,
    f_of_r,
    g_of_r,
    kernel_equality_check,
    km_basis,
    p3i,
    pr1_shape_check,
    r_poly_of_series,
    series_const,
    series_of_r_poly,
    t_apply,
    tp,
    tp_xy_series,
    u2,
    u3,
    u_apply,
    verify_quick,
)

__all__ = [
    "BitPoly",
    "QSeries",
    "PrecisionError",
    "a_seq",
    "adapted_grid",
    "agree",
    "alpha_apply",
    "c_seq",
    "check_u3_equals_u",
    "degree_law_check",
    "express_c4m",
    "f_of_r",
    "g_of_r",
    "kernel_equality_check",
    "km_basis",
    "p3i",
    "pr1_shape_check",
    "r_poly_of_series",
    "series_const",
    "series_of_r_poly",
    "t_apply",
    "tp",
    "tp_xy_series",
    "u2",
    "u3",
    "u_apply",
    "verify_quick",
]

__version__ = "0.1.0"
