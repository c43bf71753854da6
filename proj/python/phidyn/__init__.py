"""Exact dynamics of phi(x) = |1 - 1/x|. Values are passed as strings such as "3/5" or "(-1+1√5)/2"."""

from ._core import (
    ParseError,
    count_admissible_words,
    cylinder,
    entropy_lap_count,
    entropy_polynomial_root,
    entropy_spectral,
    entropy_word_growth,
    escape_time,
    h,
    h_inverse,
    itinerary,
    iterate,
    periodic_point,
    phi,
    run,
)

__all__ = [
    "ParseError",
    "count_admissible_words",
    "cylinder",
    "entropy_lap_count",
    "entropy_polynomial_root",
    "entropy_spectral",
    "entropy_word_growth",
    "escape_time",
    "h",
    "h_inverse",
    "itinerary",
    "iterate",
    "periodic_point",
    "phi",
    "run",
]
