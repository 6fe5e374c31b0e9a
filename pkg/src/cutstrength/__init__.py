"""Exact toolkit for planar lattice-free bodies: classification, lattice
width, cut strength against split-closure approximations, and closed-form
probability lower bounds with Monte Carlo verification."""

from .geometry import (
    BodyClass,
    LatticeFreeBody,
    QuadBody,
    Rational2,
    SplitBody,
    Type1Body,
    Type2Body,
    Type3Body,
    UnimodularMap,
    area,
    canonicalize,
    classify,
    corner_rays,
    directional_width,
    gauge,
    lattice_width,
    lattice_width_enumerated,
    point,
)
from .cuts import (
    RegionId,
    SplitCut,
    StrengthReport,
    admissible_normals,
    chosen_split,
    covering_lp_min,
    region_area,
    region_of,
    region_polygons,
    split_coefficients,
    strength_report,
    strength_single_split,
    strength_split_closure_approx,
)
from .bounds import (
    PiecewiseBound,
    bound_for,
    p_t1,
    p_t2_lower,
    piecewise_bound_for,
    quad_bound,
    quad_lower,
    special_values,
    t1_bound,
    t2_bound,
    t2_region_integrals,
    t3_bound,
    t3_lower,
)
from .montecarlo import McEstimate, monte_carlo_lower, thread_count
from .sweeps import DEFAULT_STEP, FAMILIES, GridRow, sweep_grid

__version__ = "0.1.0"

__all__ = [
    "BodyClass",
    "DEFAULT_STEP",
    "FAMILIES",
    "GridRow",
    "McEstimate",
    "LatticeFreeBody",
    "PiecewiseBound",
    "QuadBody",
    "Rational2",
    "RegionId",
    "SplitBody",
    "SplitCut",
    "StrengthReport",
    "Type1Body",
    "Type2Body",
    "Type3Body",
    "UnimodularMap",
    "admissible_normals",
    "area",
    "bound_for",
    "canonicalize",
    "chosen_split",
    "classify",
    "corner_rays",
    "covering_lp_min",
    "directional_width",
    "gauge",
    "lattice_width",
    "lattice_width_enumerated",
    "monte_carlo_lower",
    "p_t1",
    "p_t2_lower",
    "piecewise_bound_for",
    "point",
    "quad_bound",
    "quad_lower",
    "region_area",
    "region_of",
    "region_polygons",
    "special_values",
    "split_coefficients",
    "strength_report",
    "strength_single_split",
    "strength_split_closure_approx",
    "sweep_grid",
    "t1_bound",
    "t2_bound",
    "t2_region_integrals",
    "t3_bound",
    "t3_lower",
    "thread_count",
]
