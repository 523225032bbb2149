"""Triangle model: validity, medians, Heron forms, area classes.

Medians are carried as squared discriminants ``D_a = 2b^2 + 2c^2 - a^2``
(``D_a = 4 m_a^2``), which are exact for any exact sides. Actual median
lengths are materialized only when they are rational.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Tuple, Union

from medtri.errors import AuditFailure, DomainError
from medtri.exact import (
    Number,
    as_exact_int,
    is_square,
    rat_sqrt_exact,
    square_root,
    to_fraction,
)


class Classification(enum.Enum):
    VALID = "valid"
    DEGENERATE = "degenerate"
    INVALID = "invalid"


class AreaClass(enum.Enum):
    INTEGER = "integer"
    RATIONAL = "rational"
    IRRATIONAL = "irrational"


def classify(a: Number, b: Number, c: Number) -> Classification:
    if a <= 0 or b <= 0 or c <= 0:
        raise DomainError(f"sides must be positive, got ({a}, {b}, {c})")
    x, y, z = sorted((a, b, c))
    if x + y > z:
        return Classification.VALID
    if x + y == z:
        return Classification.DEGENERATE
    return Classification.INVALID


def _checked_sides(sides, kind):
    a, b, c = sorted(sides)
    cls = classify(a, b, c)
    if cls is not Classification.VALID:
        raise DomainError(f"{kind}({a}, {b}, {c}) is {cls.value}")
    return a, b, c


@dataclass(frozen=True)
class IntTriangle:
    """Integer-sided triangle, stored with ``a <= b <= c``."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for s in (self.a, self.b, self.c):
            if not isinstance(s, int) or isinstance(s, bool):
                raise TypeError(f"IntTriangle sides must be int, got {s!r}")
        a, b, c = _checked_sides((self.a, self.b, self.c), "IntTriangle")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    @property
    def sides(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def scaled(self, k: int) -> "IntTriangle":
        return IntTriangle(k * self.a, k * self.b, k * self.c)


@dataclass(frozen=True)
class RatTriangle:
    """Triangle with exact rational sides, stored with ``a <= b <= c``."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        sides = tuple(to_fraction(s) for s in (self.a, self.b, self.c))
        a, b, c = _checked_sides(sides, "RatTriangle")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.a, self.b, self.c))

    @property
    def sides(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def scaled(self, k: Number) -> "RatTriangle":
        k = to_fraction(k)
        return RatTriangle(k * self.a, k * self.b, k * self.c)

    def as_int(self) -> Optional[IntTriangle]:
        ints = [as_exact_int(s) for s in self]
        if any(s is None for s in ints):
            return None
        return IntTriangle(*ints)


Triangle = Union[IntTriangle, RatTriangle]


def make_triangle(sides: Iterable[Number]) -> Triangle:
    """Build an IntTriangle when every side is integral, else a RatTriangle."""
    sides = tuple(sides)
    if len(sides) != 3:
        raise DomainError(f"a triangle needs three sides, got {len(sides)}")
    ints = [as_exact_int(s) for s in sides]
    if all(s is not None for s in ints):
        return IntTriangle(*ints)
    return RatTriangle(*sides)


@dataclass(frozen=True)
class MedianData:
    D_a: Number
    D_b: Number
    D_c: Number
    exact_medians: Optional[Tuple[Number, Number, Number]] = None

    @property
    def discriminants(self) -> Tuple[Number, Number, Number]:
        return (self.D_a, self.D_b, self.D_c)


def median_discriminants(a: Number, b: Number, c: Number) -> Tuple[Number, Number, Number]:
    """``(4 m_a^2, 4 m_b^2, 4 m_c^2)`` for sides ``(a, b, c)``."""
    return (
        2 * b * b + 2 * c * c - a * a,
        2 * a * a + 2 * c * c - b * b,
        2 * a * a + 2 * b * b - c * c,
    )


def _median_discriminants_lemma2_form(a, b, c):
    s = a * a + b * b + c * c
    return (
        3 * b * b + 3 * c * c - s,
        3 * a * a + 3 * c * c - s,
        3 * a * a + 3 * b * b - s,
    )


def median_squares(T: Iterable[Number]) -> MedianData:
    a, b, c = T
    ds = median_discriminants(a, b, c)
    if ds != _median_discriminants_lemma2_form(a, b, c):
        raise AuditFailure(f"median formula variants disagree for ({a}, {b}, {c})")
    if isinstance(T, IntTriangle) or all(isinstance(s, int) for s in (a, b, c)):
        medians = _integer_medians_from(ds)
    else:
        medians = _rational_medians_from(ds)
    return MedianData(*ds, exact_medians=medians)


def _integer_medians_from(ds) -> Optional[Tuple[int, int, int]]:
    out = []
    for d in ds:
        r = square_root(d)
        if r is None or r % 2:
            return None
        out.append(r // 2)
    return tuple(out)


def _rational_medians_from(ds) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    out = []
    for d in ds:
        if d < 0:
            return None
        r = rat_sqrt_exact(d)
        if r is None:
            return None
        out.append(r / 2)
    return tuple(out)


def integer_medians(T: IntTriangle) -> Optional[Tuple[int, int, int]]:
    """``(m_a, m_b, m_c)`` when all three medians are integers."""
    a, b, c = T
    return _integer_medians_from(median_discriminants(a, b, c))


def rational_medians(T: Iterable[Number]) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    a, b, c = (to_fraction(s) for s in T)
    return _rational_medians_from(median_discriminants(a, b, c))


def sides_from_medians(mu_a: Number, mu_b: Number, mu_c: Number) -> Optional[RatTriangle]:
    """Invert the median formula: ``a = (2/3) sqrt(2 mu_b^2 + 2 mu_c^2 - mu_a^2)``.

    Returns None when any of the three roots is irrational.
    """
    if classify(mu_a, mu_b, mu_c) is not Classification.VALID:
        raise DomainError(f"medians ({mu_a}, {mu_b}, {mu_c}) do not form a triangle")
    sides = []
    for d in median_discriminants(*(to_fraction(m) for m in (mu_a, mu_b, mu_c))):
        r = rat_sqrt_exact(d)
        if r is None:
            return None
        sides.append(Fraction(2, 3) * r)
    return RatTriangle(*sides)


def four_factor(p: Number, q: Number, r: Number) -> Number:
    """``(p+q+r)(p+q-r)(p+r-q)(q+r-p)``, the Heron product of three lengths."""
    return (p + q + r) * (p + q - r) * (p + r - q) * (q + r - p)


def four_factor_squared(P: Number, Q: Number, R: Number) -> Number:
    """The same product written in the squared lengths ``P = p^2`` etc.

    Lets the product be evaluated exactly when the lengths themselves are
    irrational but their squares are not.
    """
    return 2 * (P * Q + Q * R + R * P) - (P * P + Q * Q + R * R)


def heron16(T: Iterable[Number]) -> Number:
    """``16 S^2`` for sides ``T``; zero exactly for degenerate triples."""
    a, b, c = T
    v = four_factor(a, b, c)
    if v < 0:
        raise DomainError(f"({a}, {b}, {c}) violates the triangle inequality")
    return v


def median9(m_a: Number, m_b: Number, m_c: Number) -> Number:
    """``9 S^2`` of the triangle whose medians are ``(m_a, m_b, m_c)``."""
    v = four_factor(m_a, m_b, m_c)
    if v < 0:
        raise DomainError(f"medians ({m_a}, {m_b}, {m_c}) do not form a triangle")
    return v


def area_class(v: Number) -> AreaClass:
    """Classify the area ``S`` from the exact value ``v = 16 S^2``."""
    if v < 0:
        raise DomainError(f"16S^2 must be nonnegative, got {v}")
    if isinstance(v, int):
        if not is_square(v):
            return AreaClass.IRRATIONAL
        return AreaClass.INTEGER if square_root(v) % 4 == 0 else AreaClass.RATIONAL
    root = rat_sqrt_exact(v)
    if root is None:
        return AreaClass.IRRATIONAL
    return AreaClass.INTEGER if (root / 4).denominator == 1 else AreaClass.RATIONAL


def area_from_heron16(v: Number) -> Optional[Fraction]:
    """Exact area ``S`` when it is rational."""
    root = rat_sqrt_exact(v)
    return None if root is None else root / 4
