"""Torsional-performance analysis of partially hinged rectangular plates.

The heavy lifting lives in the compiled extension ``plategap._core``: series
solutions of the plate problem under edge-concentrating loads, the gap
function and its maximum, torsional eigenvalues and resonant gap constants,
closed-form asymptotics, and the finite-difference residual oracle.
"""

from plategap._core import (  # noqa: F401
    AlphaSweep,
    Branch,
    ComboEntry,
    ComboResult,
    DegenerateConfigError,
    EigenGapEntry,
    GapProfile,
    InvalidParameterError,
    LoadSpec,
    PlateGeometry,
    PlateSolution,
    PoleProximityError,
    QuadratureError,
    ResidualReport,
    ScalingPoint,
    ScalingStudy,
    SweepSpacing,
    TorsionalMode,
    bracket_scan,
    characteristic_residual,
    combo_max_gap,
    critical_branch_index,
    edge_gap,
    edge_gap_limit,
    first_order_correction,
    fourier_sine_coefficients,
    gap_constant,
    gap_constant_table,
    gap_profile,
    gap_scaling_study,
    integrate,
    make_load,
    make_load_from_function,
    make_sine_load,
    max_abs_sine_sum,
    mode_branch,
    mode_l1_norm,
    mode_residual,
    solution_residual,
    solve,
    stable_ratio,
    sweep_alpha,
    torsional_eigenvalue,
    weak_limit_residual,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
