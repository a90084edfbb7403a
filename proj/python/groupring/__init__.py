"""Finite rings, group rings and structural predicates."""

from ._core import (
    PREDICATES,
    SCHEMA,
    CapExceeded,
    InvalidArgument,
    Ring,
    SpecParseError,
    SuiteError,
    analyze,
    canonical_spec,
    run_suite,
    verify,
)

__all__ = [
    "PREDICATES",
    "SCHEMA",
    "CapExceeded",
    "InvalidArgument",
    "Ring",
    "SpecParseError",
    "SuiteError",
    "analyze",
    "canonical_spec",
    "run_suite",
    "verify",
]
__version__ = "0.1.0"
