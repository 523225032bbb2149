"""Exact integer and rational kernels.

Everything here works on Python ``int`` and ``fractions.Fraction``; no float
ever touches a certification path.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Optional, Tuple, Union

from medtri.errors import DomainError

Number = Union[int, Fraction]

# k*k mod m for the two filter moduli; 64 and 63 = 9*7 are coprime.
_SQUARES_MOD_64 = frozenset(k * k % 64 for k in range(64))
_SQUARES_MOD_63 = frozenset(k * k % 63 for k in range(63))


def isqrt_exact(n: int) -> Tuple[int, bool]:
    """Return ``(floor(sqrt(n)), n is a perfect square)``.

    >>> isqrt_exact(99856)
    (316, True)
    >>> isqrt_exact(12)
    (3, False)
    """
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    root = math.isqrt(n)
    return root, root * root == n


def is_square(n: int) -> bool:
    """Perfect-square test with a quadratic-residue pre-filter."""
    if n < 0:
        return False
    if n % 64 not in _SQUARES_MOD_64 or n % 63 not in _SQUARES_MOD_63:
        return False
    return isqrt_exact(n)[1]


def square_root(n: int) -> Optional[int]:
    """Exact integer root of ``n``, or None when ``n`` is not a square."""
    if not is_square(n):
        return None
    return math.isqrt(n)


def to_fraction(q: Number) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, (int, Rational)):
        return Fraction(q)
    raise TypeError(f"exact value required, got {type(q).__name__}")


def rat_sqrt_exact(q: Number) -> Optional[Fraction]:
    """Exact rational square root of ``q`` or None if it is irrational.

    A reduced fraction is a rational square iff numerator and denominator
    are both integer squares.
    """
    q = to_fraction(q)
    if q < 0:
        raise DomainError(f"square root of negative rational {q}")
    num = square_root(q.numerator)
    if num is None:
        return None
    den = square_root(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def residue3(n: int) -> int:
    """``n mod 3`` in ``{0, 1, 2}``, also for negative ``n``."""
    return n % 3


def as_exact_int(q: Number) -> Optional[int]:
    """Return ``q`` as an ``int`` when it is integral, else None."""
    if isinstance(q, int):
        return q
    q = to_fraction(q)
    return q.numerator if q.denominator == 1 else None


def format_exact(q: Number) -> str:
    """Render an exact value as ``p`` or ``p/q`` (lowest terms)."""
    q = to_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
