"""Brillouin zones of discrete point sets in metric planes."""

from ._core import (
    HorizonError,
    Metric,
    PointSet,
    VerificationReport,
    WindowTooSmallError,
    ZoneRaster,
    area_estimate,
    check_equal_area,
    check_tiling,
    classify,
    distance,
    emit_config,
    enumerate_in_ball,
    gamma_focusing_bound,
    gamma_focusing_bruteforce,
    gamma_focusing_formula,
    lk_circle_coincidences,
    nearest_sorted,
    r2_bruteforce,
    r2_formula,
    raster,
    solve_quadruples,
    to_ppm,
    to_svg,
    torus_focusing,
    trace_level_set,
)

__all__ = [
    "HorizonError",
    "Metric",
    "PointSet",
    "VerificationReport",
    "WindowTooSmallError",
    "ZoneRaster",
    "area_estimate",
    "check_equal_area",
    "check_tiling",
    "classify",
    "distance",
    "emit_config",
    "enumerate_in_ball",
    "gamma_focusing_bound",
    "gamma_focusing_bruteforce",
    "gamma_focusing_formula",
    "lk_circle_coincidences",
    "nearest_sorted",
    "r2_bruteforce",
    "r2_formula",
    "raster",
    "solve_quadruples",
    "to_ppm",
    "to_svg",
    "torus_focusing",
    "trace_level_set",
]
