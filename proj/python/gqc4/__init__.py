"""GQC codes over Z4: normalization, duals, Lee distance and search."""

import json as _json

from ._gqc4 import (
    ArgumentError,
    CapExceededError,
    Code,
    DivisionError,
    Error,
    HypothesisError,
    ParseError,
    QuadPoly,
    poly_divmod,
    factor_xn1,
    gcd4,
    gray_map,
    hensel_lift,
    lee_weight,
    verify,
)
from ._gqc4 import search as _search


def search(lengths, **kw):
    """Run the search harness; returns parsed records (or text for format='csv'/'table')."""
    fmt = kw.pop("format", "json")
    out = _search(list(lengths), format=fmt, **kw)
    return _json.loads(out) if fmt == "json" else out


__all__ = [
    "ArgumentError", "CapExceededError", "Code", "DivisionError", "Error", "HypothesisError",
    "ParseError", "QuadPoly", "poly_divmod", "factor_xn1", "gcd4", "gray_map", "hensel_lift",
    "lee_weight", "search", "verify",
]
