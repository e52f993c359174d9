"""Shared helpers for the test suite."""

from fntwist import AnnulusCoords


def rel_err(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def max_rel(a, b) -> float:
    ta = a.as_tuple() if isinstance(a, AnnulusCoords) else tuple(a)
    tb = b.as_tuple() if isinstance(b, AnnulusCoords) else tuple(b)
    return max(rel_err(u, v) for u, v in zip(ta, tb))
