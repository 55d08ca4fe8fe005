"""Exact computations on numerical semigroups (C++ core)."""

from ._core import (
    SemigroupError,
    apery,
    d_bound,
    extend,
    fuzz,
    info,
    is_arf,
    is_arf_element,
    is_med,
    is_symmetric,
    med_closure,
    minimal_generators,
)

__all__ = [
    "SemigroupError",
    "apery",
    "d_bound",
    "extend",
    "fuzz",
    "info",
    "is_arf",
    "is_arf_element",
    "is_med",
    "is_symmetric",
    "med_closure",
    "minimal_generators",
]
