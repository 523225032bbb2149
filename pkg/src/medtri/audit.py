"""Mechanical checks of the equal-area identity system and the quartic in delta.

Two kinds of result live here. Universal identities (the eight equal-area
products, the shift bookkeeping, the T expansion, the Vieta coefficients, the
cubic-sum identity) must hold for every input and raise :class:`AuditFailure`
when they do not. Conditional claims (the extra quartic roots, the factored
quartic) are only evaluated and reported with their exact residuals.

Half-integer terms such as ``3/2 * C`` are removed by doubling every factor of
the affected product, which multiplies that product by ``2**4 = 16``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from medtri.errors import AuditFailure, DomainError, UnsupportedInputError
from medtri.exact import Number, isqrt_exact, residue3
from medtri.triangle import (
    IntTriangle,
    four_factor,
    four_factor_squared,
    heron16,
    integer_medians,
    median_discriminants,
)

# Multiplier that puts each of q1..q8 on the common 144 S^2 scale.
NORMALIZERS = (16, 9, 1, 9, 1, 9, 1, 9)
CONDITION_LABELS = ("q1", "q2", "q3", "q4", "q5", "q6", "q7", "q8")


@dataclass(frozen=True)
class ConditionReport:
    q: Tuple[Number, ...]
    normalized: Tuple[Number, ...]
    all_equal: bool
    heron144: Number
    route: str = "direct"
    # q4 with the factor (A + 2C - B) in place of (A + 2M_C - B), scaled by 9.
    alt_factor_product: Optional[Number] = None

    @property
    def common_value(self) -> Optional[Number]:
        return self.normalized[0] if self.all_equal else None

    def restated(self) -> Dict[str, Tuple[Number, Number]]:
        """The eight values regrouped per triangle label under both labelings.

        The second labeling moves each (9S^2, 16S^2) pair to another triangle
        without changing any formula, so the values are shared.
        """
        pairs = [(self.q[i], self.q[i + 1]) for i in range(0, 8, 2)]
        return {
            "24:LTN": pairs[0], "24:ZUH": pairs[1], "24:YVW": pairs[2], "24:EGJ": pairs[3],
            "25:ZUH": pairs[0], "25:YVW": pairs[1], "25:EGJ": pairs[2], "25:LTN": pairs[3],
        }


def _report(q, heron144, route, alt=None) -> ConditionReport:
    normalized = tuple(k * v for k, v in zip(NORMALIZERS, q))
    all_equal = all(v == normalized[0] for v in normalized)
    if all_equal and normalized[0] != heron144:
        raise AuditFailure(f"common value {normalized[0]} differs from 9*heron16 = {heron144}")
    return ConditionReport(
        q=tuple(q), normalized=normalized, all_equal=all_equal,
        heron144=heron144, route=route, alt_factor_product=alt,
    )


def eight_conditions(A, B, C, M_A, M_B, M_C) -> ConditionReport:
    """Evaluate the eight area products from sides and their exact medians."""
    for side, m, d in zip((A, B, C), (M_A, M_B, M_C), median_discriminants(A, B, C)):
        if m < 0 or 4 * m * m != d:
            raise DomainError(f"{m} is not the median to side {side} of ({A}, {B}, {C})")
    q = (
        four_factor(M_A, M_B, M_C),
        four_factor(A, B, C),
        four_factor(2 * M_A, 2 * M_B, 3 * C),
        four_factor(A, B, 2 * M_C),
        four_factor(2 * M_A, 3 * B, 2 * M_C),
        four_factor(A, 2 * M_B, C),
        four_factor(3 * A, 2 * M_B, 2 * M_C),
        four_factor(2 * M_A, B, C),
    )
    alt = 9 * (A + B + 2 * M_C) * (A + B - 2 * M_C) * (A + 2 * C - B) * (2 * M_C + B - A)
    return _report(q, 9 * four_factor(A, B, C), "direct", alt)


def eight_conditions_squared(A, B, C) -> ConditionReport:
    """Same products for any triangle, written in squared medians.

    Uses ``4 M^2 = D`` so irrational medians never appear; ``q1`` becomes a
    fraction when ``16`` does not divide ``D``-products.
    """
    if heron16((A, B, C)) < 0:
        raise DomainError(f"({A}, {B}, {C}) is not a triangle")
    DA, DB, DC = median_discriminants(A, B, C)
    A2, B2, C2 = A * A, B * B, C * C
    q = (
        Fraction(four_factor_squared(DA, DB, DC), 16),
        four_factor_squared(A2, B2, C2),
        four_factor_squared(DA, DB, 9 * C2),
        four_factor_squared(A2, B2, DC),
        four_factor_squared(DA, 9 * B2, DC),
        four_factor_squared(A2, DB, C2),
        four_factor_squared(9 * A2, DB, DC),
        four_factor_squared(DA, B2, C2),
    )
    q = tuple(v.numerator if isinstance(v, Fraction) and v.denominator == 1 else v for v in q)
    return _report(q, 9 * four_factor(A, B, C), "squared")


@dataclass(frozen=True)
class ShiftProfile:
    delta_A: Fraction
    delta_B: Fraction
    delta_C: Fraction
    theta_A: Fraction
    theta_B: Fraction
    theta_C: Fraction
    X_M: Fraction
    Y_M: Fraction
    Z_M: Fraction
    W_M: Fraction
    X_S: Fraction
    Y_S: Fraction
    Z_S: Fraction
    W_S: Fraction

    @property
    def deltas(self):
        return (self.delta_A, self.delta_B, self.delta_C)

    @property
    def thetas(self):
        return (self.theta_A, self.theta_B, self.theta_C)

    def shifted_products(self) -> Tuple[Fraction, ...]:
        """The eight area products rebuilt from the X/Y/Z/W quadruples and shifts."""
        X, Y, Z, W = self.X_M, self.Y_M, self.Z_M, self.W_M
        XS, YS, ZS, WS = self.X_S, self.Y_S, self.Z_S, self.W_S
        dA, dB, dC = self.deltas
        tA, tB, tC = self.thetas
        return (
            X * Y * Z * W,
            XS * YS * ZS * WS,
            (X + dC) * (Y - dC) * (Z + dC) * (W + dC),
            (XS + tC) * (YS - tC) * (ZS + tC) * (WS + tC),
            (X + dB) * (Y + dB) * (Z - dB) * (W + dB),
            (XS + tB) * (YS + tB) * (ZS - tB) * (WS + tB),
            (X + dA) * (Y + dA) * (Z + dA) * (W - dA),
            (XS + tA) * (YS + tA) * (ZS + tA) * (WS - tA),
        )


def shift_profile(A, B, C, M_A, M_B, M_C) -> ShiftProfile:
    """Compute the six shifts and verify each shifted bracket against its
    direct form (twelve median brackets, twelve side brackets)."""
    A, B, C, M_A, M_B, M_C = (Fraction(v) for v in (A, B, C, M_A, M_B, M_C))
    h = Fraction(3, 2)
    dA, dB, dC = h * A - M_A, h * B - M_B, h * C - M_C
    tA, tB, tC = 2 * M_A - A, 2 * M_B - B, 2 * M_C - C
    X, Y, Z, W = M_A + M_B + M_C, M_A + M_B - M_C, M_A + M_C - M_B, M_C + M_B - M_A
    XS, YS, ZS, WS = A + B + C, A + B - C, A + C - B, C + B - A

    median_brackets = [
        (M_A + M_B + h * C, X + dC), (M_A + h * B + M_C, X + dB), (h * A + M_B + M_C, X + dA),
        (M_A + M_B - h * C, Y - dC), (M_A + h * B - M_C, Y + dB), (h * A + M_B - M_C, Y + dA),
        (M_A + h * C - M_B, Z + dC), (M_A + M_C - h * B, Z - dB), (h * A + M_C - M_B, Z + dA),
        (h * C + M_B - M_A, W + dC), (M_C + h * B - M_A, W + dB), (M_C + M_B - h * A, W - dA),
    ]
    side_brackets = [
        (A + B + 2 * M_C, XS + tC), (A + 2 * M_B + C, XS + tB), (2 * M_A + B + C, XS + tA),
        (A + B - 2 * M_C, YS - tC), (A + 2 * M_B - C, YS + tB), (2 * M_A + B - C, YS + tA),
        (A + 2 * M_C - B, ZS + tC), (A + C - 2 * M_B, ZS - tB), (2 * M_A + C - B, ZS + tA),
        (2 * M_C + B - A, WS + tC), (C + 2 * M_B - A, WS + tB), (C + B - 2 * M_A, WS - tA),
    ]
    for i, (direct, shifted) in enumerate(median_brackets + side_brackets):
        if direct != shifted:
            raise AuditFailure(f"shift bracket {i}: {direct} != {shifted}")
    return ShiftProfile(dA, dB, dC, tA, tB, tC, X, Y, Z, W, XS, YS, ZS, WS)


def check_shifted_products(report: ConditionReport, profile: ShiftProfile) -> bool:
    """The shifted-form products equal q1..q8 after removing the doubling scale."""
    unscale = (1, 1, 16, 1, 16, 1, 16, 1)
    return all(
        Fraction(q) == s * k for q, s, k in zip(report.q, profile.shifted_products(), unscale)
    )


def t_polynomial(x, y, z, w, delta) -> Number:
    cubic = x + y + z - w
    quad = x * y + x * z - x * w + y * z - y * w - z * w
    lin = x * y * z - x * y * w - x * z * w - y * z * w
    d = delta
    return d ** 4 + cubic * d ** 3 + quad * d ** 2 + lin * d


def t_expansion_check(x, y, z, w, delta) -> bool:
    """``(x+d)(y+d)(z+d)(w-d) == xyzw - T(d)``; an identity in all variables."""
    lhs = (x + delta) * (y + delta) * (z + delta) * (w - delta)
    return lhs == x * y * z * w - t_polynomial(x, y, z, w, delta)


@dataclass(frozen=True)
class QuarticProfile:
    m_a: Number
    m_b: Number
    m_c: Number
    c: Number
    x: Number
    y: Number
    z: Number
    w: Number
    delta: Number
    coeff_cubic: Number
    coeff_quad: Number
    coeff_lin: Number
    T_value: Number
    xyzw: Number
    consistent: bool

    @property
    def lin_implied_by_factored(self) -> Number:
        """Linear coefficient of ``d (d + 16 m_a)(d^2 + K)``, K the quadratic one."""
        return 16 * self.m_a * (96 * self.m_a ** 2 - 8 * self.m_c ** 2 - 18 * self.c ** 2)

    @property
    def lin_residual(self) -> Number:
        return self.coeff_lin - self.lin_implied_by_factored

    def quartic(self, d: Number) -> Number:
        return d ** 4 + self.coeff_cubic * d ** 3 + self.coeff_quad * d ** 2 + self.coeff_lin * d


def xyzw_profile(m_a, m_b, m_c, c, *, check: bool = True) -> QuarticProfile:
    """Build the x/y/z/w substitution and quartic coefficients.

    With ``check`` (the default) the four values must come from one triangle:
    ``c`` must be the side opposite ``m_c``. Then ``xyzw = 576 S^2`` and
    ``T(4 m_b - 4 m_a) = 0`` are enforced. With ``check=False`` arbitrary
    tuples are accepted and only the polynomial identities are enforced.
    """
    x = 4 * m_a + 2 * m_c + 3 * c
    y = 4 * m_a + 2 * m_c - 3 * c
    z = 4 * m_a + 3 * c - 2 * m_c
    w = 3 * c + 2 * m_c - 4 * m_a
    delta = 4 * m_b - 4 * m_a
    cubic = x + y + z - w
    quad = x * y + x * z - x * w + y * z - y * w - z * w
    lin = x * y * z - x * y * w - x * z * w - y * z * w
    if cubic != 16 * m_a:
        raise AuditFailure(f"x+y+z-w = {cubic} != 16*m_a")
    if quad != 96 * m_a ** 2 - 8 * m_c ** 2 - 18 * c ** 2:
        raise AuditFailure(f"quadratic coefficient {quad} != 96m_a^2 - 8m_c^2 - 18c^2")
    T = t_polynomial(x, y, z, w, delta)
    xyzw = x * y * z * w
    consistent = 9 * c * c == 4 * (2 * m_a ** 2 + 2 * m_b ** 2 - m_c ** 2)
    if check:
        if not consistent:
            raise DomainError(f"side {c} is not opposite median {m_c} for medians "
                              f"({m_a}, {m_b}, {m_c})")
        if xyzw != 64 * four_factor(m_a, m_b, m_c):
            raise AuditFailure(f"xyzw = {xyzw} != 576 S^2")
        if T != 0:
            raise AuditFailure(f"T(4m_b - 4m_a) = {T} != 0")
    return QuarticProfile(m_a, m_b, m_c, c, x, y, z, w, delta, cubic, quad, lin, T, xyzw, consistent)


@dataclass(frozen=True)
class RootEvaluation:
    candidate: Number
    value: Number

    @property
    def vanishes(self) -> bool:
        return self.value == 0


def quartic_root_audit(profile: QuarticProfile) -> Dict[str, RootEvaluation]:
    """Evaluate the quartic at the four claimed roots.

    Keys are ``zero``, ``delta``, ``minus_delta`` and ``minus_16ma``. Only the
    first two are forced to vanish by the geometry.
    """
    d = profile.delta
    candidates = {
        "zero": 0,
        "delta": d,
        "minus_delta": -d,
        "minus_16ma": -16 * profile.m_a,
    }
    return {k: RootEvaluation(v, profile.quartic(v)) for k, v in candidates.items()}


@dataclass(frozen=True)
class Lemma2Report:
    sum_sq_residue: int
    median_residues: Tuple[int, int, int]
    implication_holds: bool


def lemma2_check(T: IntTriangle) -> Lemma2Report:
    """If one median is a multiple of 3, are all of them?"""
    medians = integer_medians(T)
    if medians is None:
        raise UnsupportedInputError(f"{tuple(T)} has no integer medians")
    res = tuple(residue3(m) for m in medians)
    zeros = sum(r == 0 for r in res)
    return Lemma2Report(
        sum_sq_residue=residue3(sum(s * s for s in T)),
        median_residues=res,
        implication_holds=zeros in (0, 3),
    )


@dataclass(frozen=True)
class Lemma3Report:
    rhs: int
    sign: int
    rhs_residue: int
    m_c_residue: int
    is_square: bool
    delta2: Optional[int]
    # An integer delta2 exists only if m_c = 0 (mod 3).
    constraint_holds: bool


def lemma3_mod3(m_a: int, m_c: int, c: int) -> Lemma3Report:
    rhs = 8 * m_c * m_c + 18 * c * c - 96 * m_a * m_a
    sq = False
    root = None
    if rhs >= 0:
        root, sq = isqrt_exact(rhs)
    return Lemma3Report(
        rhs=rhs,
        sign=(rhs > 0) - (rhs < 0),
        rhs_residue=residue3(rhs),
        m_c_residue=residue3(m_c),
        is_square=sq,
        delta2=root if sq else None,
        constraint_holds=(not sq) or residue3(m_c) == 0,
    )


def p_a(m_a, m_b, m_c, c, d):
    """Cubic left after removing the zero root from the quartic, in ``m_a``."""
    K = 8 * m_c ** 2 + 18 * c ** 2
    return d ** 3 + 16 * m_a * d ** 2 + (96 * m_a ** 2 - K) * d + 16 * m_a * (16 * m_a ** 2 - 4 * m_c ** 2 - 9 * c ** 2)


def q_b(m_a, m_b, m_c, c, d):
    """The ``m_b`` cubic evaluated at ``-d``."""
    K = 8 * m_c ** 2 + 18 * c ** 2
    return -d ** 3 + 16 * m_b * d ** 2 - (96 * m_b ** 2 - K) * d + 16 * m_b * (16 * m_b ** 2 - 4 * m_c ** 2 - 9 * c ** 2)


def r_quadratic(m_a, m_b, m_c, c, d):
    return d ** 2 + 6 * (m_a - m_b) * d + 16 * (m_a ** 2 - m_a * m_b + m_b ** 2) - (4 * m_c ** 2 + 9 * c ** 2)


def cubic_sum_check(m_a, m_b, m_c, c, d) -> bool:
    lhs = p_a(m_a, m_b, m_c, c, d) + q_b(m_a, m_b, m_c, c, d)
    return lhs == 16 * (m_a + m_b) * r_quadratic(m_a, m_b, m_c, c, d)


@dataclass(frozen=True)
class TriangleAudit:
    """Everything the audit computes for one integer-median triangle."""

    triangle: IntTriangle
    medians: Tuple[int, int, int]
    conditions: ConditionReport
    shifts: ShiftProfile
    shifted_ok: bool
    quartic: QuarticProfile
    roots: Dict[str, RootEvaluation]
    lemma2: Lemma2Report
    lemma3: Lemma3Report
    cubic_sum_ok: bool

    @property
    def universal_ok(self) -> bool:
        return (
            self.conditions.all_equal
            and self.shifted_ok
            and self.quartic.T_value == 0
            and t_expansion_check(self.quartic.x, self.quartic.y, self.quartic.z,
                                  self.quartic.w, self.quartic.delta)
            and self.roots["zero"].vanishes
            and self.roots["delta"].vanishes
            and self.cubic_sum_ok
        )


def audit_triangle(T: IntTriangle) -> TriangleAudit:
    medians = integer_medians(T)
    if medians is None:
        raise UnsupportedInputError(f"{tuple(T)} has no integer medians")
    a, b, c = T
    m_a, m_b, m_c = medians
    conditions = eight_conditions(a, b, c, m_a, m_b, m_c)
    shifts = shift_profile(a, b, c, m_a, m_b, m_c)
    quartic = xyzw_profile(m_a, m_b, m_c, c)
    return TriangleAudit(
        triangle=T,
        medians=medians,
        conditions=conditions,
        shifts=shifts,
        shifted_ok=check_shifted_products(conditions, shifts),
        quartic=quartic,
        roots=quartic_root_audit(quartic),
        lemma2=lemma2_check(T),
        lemma3=lemma3_mod3(m_a, m_c, c),
        cubic_sum_ok=cubic_sum_check(m_a, m_b, m_c, c, quartic.delta),
    )

