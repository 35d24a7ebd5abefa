"""alphaembed: alpha-quads, construction curves, cube moves and the
1-embedding (s-embedding) star-triangle pipeline."""

from .geometry import (
    AlphaKind,
    AlphaSolveResult,
    ExtendedAlpha,
    Point,
    Quad,
    SideLengths,
    alpha_residual,
    circumradii,
    circumradii_residual,
    f_alpha,
    f_quad_residual,
    has_extremal_pair,
    is_alpha_quad,
    is_kite,
    is_proper_polygon,
    solve_alpha,
)

__all__ = [
    "AlphaKind", "AlphaSolveResult", "ExtendedAlpha", "Point", "Quad",
    "SideLengths", "alpha_residual", "circumradii", "circumradii_residual",
    "f_alpha", "f_quad_residual", "has_extremal_pair", "is_alpha_quad",
    "is_kite", "is_proper_polygon", "solve_alpha",
]

__version__ = "0.1.0"
