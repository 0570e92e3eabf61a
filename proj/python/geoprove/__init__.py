"""Algebraic prover for elementary geometry statements.

Thin wrapper around the compiled `_core` module: prove a construction's
thesis with an explicit cofactor certificate, score its difficulty, or
discover and rank true statements over a figure.
"""

try:
    from ._core import (  # noqa: F401
        GeoproveError,
        discover,
        polynomial_roundtrip,
        prove,
        translate,
    )
except ImportError:  # in-tree builds keep the extension next to the package
    from _core import (  # noqa: F401
        GeoproveError,
        discover,
        polynomial_roundtrip,
        prove,
        translate,
    )

__all__ = [
    "GeoproveError",
    "discover",
    "polynomial_roundtrip",
    "prove",
    "translate",
]
