"""Exact Le-Greuel type invariants of singularities.

Thin re-export of the compiled module: every operation takes variable names
and polynomial strings, and returns plain Python values. See the doc strings
on the individual functions.
"""

from _legreuel import (
    ComputationError,
    chi,
    colon,
    curve_mu,
    dim,
    euler_diff,
    gorenstein_mu,
    icis,
    ids,
    intersect,
    multiplicity,
    pfaffians,
    saturate,
    std_basis,
    vdim,
)

__version__ = "0.1.0"

__all__ = [
    "ComputationError",
    "chi",
    "colon",
    "curve_mu",
    "dim",
    "euler_diff",
    "gorenstein_mu",
    "icis",
    "ids",
    "intersect",
    "multiplicity",
    "pfaffians",
    "saturate",
    "std_basis",
    "vdim",
]
