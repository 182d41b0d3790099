"""Exact spectra, delta-vectors and counting polynomials of lattice polytopes.

The package computes, in exact rational arithmetic, the spectrum of a lattice
simplex or H-polytope containing the origin as an interior point, bins it
into the delta-vector, refines it into weighted classes, and expands both
into lattice-point counting polynomials. A deliberately naive enumeration
oracle recomputes everything by brute force so that every closed-form result
can be cross-checked.
"""

from .ehrhart import (
    DeltaVector,
    delta_to_ehrhart,
    ehrhart_series_truncated,
    weighted_ehrhart,
)
from .errors import (
    DegenerateSimplex,
    EnumerationTooLarge,
    ExponentOutOfRange,
    InternalInconsistency,
    InvalidInput,
    NotReduced,
    OriginNotInterior,
    PolyspecError,
)
from .exact import FracPoly, Rat, RatPoly
from .geometry import HPolytope, Simplex, WeightVector, origin_barycentric
from .oracle import (
    DEFAULT_CAP,
    DilateCount,
    count_dilate,
    delta_by_series,
    dilate_counts,
    ehrhart_by_interpolation,
    nu_histogram,
    spectrum_by_enumeration,
    weighted_count,
)
from .sampling import random_reduced_simplices, random_simplex
from .spectrum import (
    SpectrumReport,
    is_unimodal,
    spectrum_is_integral,
    spectrum_reduced_simplex,
    spectrum_stats,
    spectrum_to_delta,
    toric_spectrum_box,
    toric_spectrum_reeve,
    weighted_delta_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAP",
    "DegenerateSimplex",
    "DeltaVector",
    "DilateCount",
    "EnumerationTooLarge",
    "ExponentOutOfRange",
    "FracPoly",
    "HPolytope",
    "InternalInconsistency",
    "InvalidInput",
    "NotReduced",
    "OriginNotInterior",
    "PolyspecError",
    "Rat",
    "RatPoly",
    "Simplex",
    "SpectrumReport",
    "WeightVector",
    "count_dilate",
    "delta_by_series",
    "delta_to_ehrhart",
    "dilate_counts",
    "ehrhart_by_interpolation",
    "ehrhart_series_truncated",
    "is_unimodal",
    "nu_histogram",
    "origin_barycentric",
    "random_reduced_simplices",
    "random_simplex",
    "spectrum_by_enumeration",
    "spectrum_is_integral",
    "spectrum_reduced_simplex",
    "spectrum_stats",
    "spectrum_to_delta",
    "toric_spectrum_box",
    "toric_spectrum_reeve",
    "weighted_count",
    "weighted_delta_decomposition",
    "weighted_ehrhart",
]
