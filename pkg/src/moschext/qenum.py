"""A fixed computable enumeration of the rationals.

``alpha(J(m, n)) = unzigzag(m) / (n + 1)`` where ``unzigzag`` lists the
integers as ``0, -1, 1, -2, 2, ...``.  Every rational appears (infinitely
often); ``alpha(0) = 0``.
"""

from __future__ import annotations

from fractions import Fraction

from .names import pair_j, unpair_j

__all__ = ["zigzag", "unzigzag", "alpha_q", "index_of_q"]


def zigzag(a: int) -> int:
    return 2 * a if a >= 0 else -2 * a - 1


def unzigzag(m: int) -> int:
    return m // 2 if m % 2 == 0 else -(m + 1) // 2


def alpha_q(i: int) -> Fraction:
    m, n = unpair_j(i)
    return Fraction(unzigzag(m), n + 1)


def index_of_q(q) -> int:
    """An index of ``q`` in lowest terms: ``J(zigzag(p), den - 1)``."""
    q = Fraction(q)
    return pair_j(zigzag(q.numerator), q.denominator - 1)
