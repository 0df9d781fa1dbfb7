"""Exact structure constants for symmetric, quasisymmetric and polynomial bases
via unitriangular transition matrices and Moebius inversion."""

__version__ = "0.1.0"
