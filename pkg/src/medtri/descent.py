"""The companion-triangle transform and the descent driver built on it.

The companion of a triangle with rational medians ``(m_a, m_b, m_c)`` is the
triangle with sides ``(2/3) m_a, (2/3) m_b, (2/3) m_c``. Its medians are half
the original sides and its area is a third of the original area.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from medtri.errors import AuditFailure, DomainError, UnsupportedInputError
from medtri.exact import residue3, to_fraction
from medtri.triangle import (
    AreaClass,
    IntTriangle,
    RatTriangle,
    Triangle,
    area_class,
    area_from_heron16,
    heron16,
    integer_medians,
    make_triangle,
    rational_medians,
)

TWO_THIRDS = Fraction(2, 3)


def _as_triangle(T) -> Triangle:
    if isinstance(T, (IntTriangle, RatTriangle)):
        return T
    return make_triangle(T)


def companion(T) -> RatTriangle:
    T = _as_triangle(T)
    medians = rational_medians(T)
    if medians is None:
        raise UnsupportedInputError(f"{tuple(T)} has irrational medians")
    child = RatTriangle(*(TWO_THIRDS * m for m in medians))
    child_medians = rational_medians(child)
    expected = sorted(to_fraction(s) / 2 for s in T)
    if child_medians is None or sorted(child_medians) != expected:
        raise AuditFailure(f"companion of {tuple(T)} does not have medians {expected}")
    return child


def companion_medians(T) -> Tuple[Fraction, Fraction, Fraction]:
    """Medians of ``companion(T)``, matched to its sorted sides."""
    medians = rational_medians(companion(T))
    assert medians is not None
    return medians


def area_ratio_check(T) -> bool:
    """True iff ``heron16(companion(T)) * 9 == heron16(T)`` exactly."""
    T = _as_triangle(T)
    return heron16(companion(T)) * 9 == heron16(T)


def similarity_check(T1, T2) -> bool:
    r1 = sorted(to_fraction(s) for s in _as_triangle(T1))
    r2 = sorted(to_fraction(s) for s in _as_triangle(T2))
    k = r1[0] / r2[0]
    return r1[1] / r2[1] == k and r1[2] / r2[2] == k


GATES = ("g1", "g2", "g3", "g4")
GATE_DESCRIPTIONS = {
    "g1": "integer medians",
    "g2": "all medians divisible by 3",
    "g3": "all sides even",
    "g4": "integer area divisible by 3",
}


@dataclass(frozen=True)
class DescentGateReport:
    triangle: IntTriangle
    medians_integer: bool
    medians: Optional[Tuple[int, int, int]]
    median_residues: Optional[Tuple[int, int, int]]
    medians_div3: Tuple[bool, bool, bool]
    side_residues: Tuple[int, int, int]
    sides_even: Tuple[bool, bool, bool]
    heron16: int
    area_class: AreaClass
    area_div3: bool
    failed: Tuple[str, ...] = ()
    child: Optional[IntTriangle] = None
    child_heron16: Optional[int] = None

    @property
    def step_produced(self) -> bool:
        return self.child is not None

    @property
    def outcome(self) -> str:
        return "StepProduced" if self.step_produced else "GateFailed"


def descent_step(T) -> DescentGateReport:
    """Evaluate every descent gate on ``T``; no short-circuiting.

    g2 can only pass when g1 does, since residues of irrational medians are
    undefined.
    """
    T = _as_triangle(T)
    if not isinstance(T, IntTriangle):
        raise DomainError(f"descent needs integer sides, got {tuple(T)}")
    medians = integer_medians(T)
    h16 = heron16(T)
    acls = area_class(h16)
    failed: List[str] = []

    if medians is None:
        failed.append("g1")
        m_res = None
        div3 = (False, False, False)
    else:
        m_res = tuple(residue3(m) for m in medians)
        div3 = tuple(r == 0 for r in m_res)
    if not all(div3):
        failed.append("g2")

    even = tuple(s % 2 == 0 for s in T)
    if not all(even):
        failed.append("g3")

    area_div3 = False
    if acls is AreaClass.INTEGER:
        area_div3 = area_from_heron16(h16) % 3 == 0
    if not area_div3:
        failed.append("g4")

    child = child_h16 = None
    if not failed:
        rc = companion(T).as_int()
        if rc is None:
            raise AuditFailure(f"gates passed but companion of {tuple(T)} is not integral")
        child, child_h16 = rc, heron16(rc)
        if child_h16 * 9 != h16 or integer_medians(child) is None:
            raise AuditFailure(f"descent child {tuple(child)} breaks the area or median law")

    return DescentGateReport(
        triangle=T,
        medians_integer=medians is not None,
        medians=medians,
        median_residues=m_res,
        medians_div3=div3,
        side_residues=tuple(residue3(s) for s in T),
        sides_even=even,
        heron16=h16,
        area_class=acls,
        area_div3=area_div3,
        failed=tuple(failed),
        child=child,
        child_heron16=child_h16,
    )


def descent_run(T, max_iters: int) -> List[DescentGateReport]:
    """Apply :func:`descent_step` until a gate fails or ``max_iters`` steps.

    Terminates: every produced child has a ninth of its parent's ``16 S^2``.
    """
    if max_iters < 0:
        raise DomainError(f"max_iters must be nonnegative, got {max_iters}")
    trace: List[DescentGateReport] = []
    current = _as_triangle(T)
    for _ in range(max_iters):
        report = descent_step(current)
        trace.append(report)
        if not report.step_produced:
            break
        current = report.child
    return trace
