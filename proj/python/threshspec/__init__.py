"""Exact characteristic polynomials, spectra and reconstruction for threshold graphs."""

from ._core import (
    BlockSequence,
    Error,
    InvalidArgument,
    NonIntegerOrNegativeGamma,
    NotDivisible,
    NotThreshold,
    NotThresholdSpectrum,
    ParseError,
    brute_charpoly,
    char_poly,
    determinant,
    divisor_polynomial,
    gamma,
    graph6_encode,
    multiplicities,
    recognize,
    reconstruct,
    spectrum,
    verify_distinct,
)

__all__ = [
    "BlockSequence",
    "Error",
    "InvalidArgument",
    "NonIntegerOrNegativeGamma",
    "NotDivisible",
    "NotThreshold",
    "NotThresholdSpectrum",
    "ParseError",
    "brute_charpoly",
    "char_poly",
    "determinant",
    "divisor_polynomial",
    "gamma",
    "graph6_encode",
    "multiplicities",
    "recognize",
    "reconstruct",
    "spectrum",
    "verify_distinct",
]
