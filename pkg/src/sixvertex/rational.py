"""Exact rational backend: gmpy2.mpq when available, fractions.Fraction otherwise.

Both keep values reduced with a positive denominator, which is all the rest
of the package relies on. gmpy2 is roughly an order of magnitude faster,
which the brute-force and contraction suites need.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Q

__all__ = ["Q", "rat_str", "parse_rat"]


def rat_str(q) -> str:
    """Canonical text form: 'p' for integers, 'p/q' otherwise."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str):
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return Q(int(num), int(den))
    return Q(int(text))
