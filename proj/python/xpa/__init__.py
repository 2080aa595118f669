"""Expansion, l1 cohomology and property-A kernel profiles of finite graphs."""

from ._core import (
    CapExceeded,
    InputError,
    __version__,
    cheeger,
    coboundary,
    fnv1a,
    graph,
    propa,
    quotient_norm,
    report,
    run,
    variation_lower_bound,
)

__all__ = [
    "CapExceeded",
    "InputError",
    "__version__",
    "cheeger",
    "coboundary",
    "fnv1a",
    "graph",
    "propa",
    "quotient_norm",
    "report",
    "run",
    "variation_lower_bound",
]
