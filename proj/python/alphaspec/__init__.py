"""Spectra, bounds and exhaustive theorem checks for A_alpha(G) = alpha D + (1 - alpha) A."""

from ._core import (
    CapabilityError,
    Graph,
    NumericError,
    ParseError,
    bounds,
    eigenvalues,
    enumerate,
    family,
    indices,
    spectral_radius,
    spectrum,
    theorems,
    verify,
)

__all__ = [
    "CapabilityError",
    "Graph",
    "NumericError",
    "ParseError",
    "bounds",
    "eigenvalues",
    "enumerate",
    "family",
    "indices",
    "spectral_radius",
    "spectrum",
    "theorems",
    "verify",
]
