"""Logical entropy, Shannon entropy and the partition lattice.

The compiled core lives in ``ditlogic._ditlogic``; this package re-exports it
and adds ``fractions.Fraction`` wrappers for the exact entry points.
"""

from fractions import Fraction

from ._ditlogic import *  # noqa: F401,F403
from ._ditlogic import (
    Error,
    Partition,
    logical_entropy_exact as _logical_entropy_exact,
    logical_entropy_of_exact as _logical_entropy_of_exact,
    logical_mutual_exact as _logical_mutual_exact,
)

__version__ = "0.1.0"


def _as_text(values):
    return None if values is None else [str(Fraction(v)) for v in values]


def logical_entropy_exact(pi, weights=None):
    """h(pi) as a Fraction; weights may be Fractions, ints or decimal strings."""
    return Fraction(_logical_entropy_exact(pi, _as_text(weights)))


def logical_entropy_of_exact(p):
    """1 - sum p_i^2 as a Fraction."""
    return Fraction(_logical_entropy_of_exact(_as_text(p)))


def logical_mutual_exact(pi, sigma):
    """Counting measure of dit(pi) & dit(sigma) as a Fraction."""
    return Fraction(_logical_mutual_exact(pi, sigma))
