"""Exact computation of Jack polynomial power-sum coefficients, free cumulants
of anisotropic Young diagrams, and Kerov polynomials in two parameters."""

ENGINE_VERSION = "0.1.0"

from .algebra import (  # noqa: F401
    ALPHA,
    BETA,
    ETA,
    ZETA,
    FieldElem,
    LinsolveError,
    MultiPoly,
    Rational,
    TruncSeries,
    binomial,
    fe,
    linsolve,
    series_comp_inverse,
    series_reciprocal,
)
from .partitions import Partition, enumerate_partitions  # noqa: F401
