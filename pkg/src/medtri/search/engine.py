"""Bounded, sharded enumeration of integer-median triangles.

Each shard scans a disjoint range of the largest side ``c`` with a fast kernel
and certifies its hits with exact arithmetic. Shards run on a thread pool (the
compiled kernel releases the GIL) and the merged output is always sorted by
``(c, b, a)``, so results do not depend on the shard count.
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from medtri.audit import eight_conditions, lemma2_check, xyzw_profile
from medtri.descent import companion, similarity_check
from medtri.errors import AuditFailure, DomainError, UnsupportedInputError
from medtri.exact import residue3
from medtri.search import kernels
from medtri.triangle import AreaClass, IntTriangle, area_class, heron16, integer_medians

log = logging.getLogger(__name__)

# Largest bound at which the even-sides filter is checked against a full scan.
CALIBRATION_BOUND = 400
MIN_SIDE = 3

AUDIT_KEYS = ("eight_conditions", "t_zero", "lemma2", "nonsimilar_companion")


@dataclass(frozen=True)
class SearchConfig:
    max_side: int
    shards: int = 1
    use_even_filter: bool = False
    output_path: str = "results.jsonl"
    backend: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.max_side, int) or self.max_side < MIN_SIDE:
            raise DomainError(f"max_side must be an integer >= {MIN_SIDE}, got {self.max_side!r}")
        if not isinstance(self.shards, int) or self.shards < 1:
            raise DomainError(f"shards must be a positive integer, got {self.shards!r}")
        if self.backend is not None and self.backend not in kernels.BACKENDS:
            raise DomainError(f"unknown backend {self.backend!r}")


@dataclass(frozen=True)
class Shard:
    """Half-open range ``[c_lo, c_hi)`` of the largest side."""

    c_lo: int
    c_hi: int


@dataclass(frozen=True)
class CertifiedMedianTriangle:
    sides: Tuple[int, int, int]
    medians: Tuple[int, int, int]
    heron16: int
    area_class: AreaClass
    side_residues: Tuple[int, int, int]
    median_residues: Tuple[int, int, int]
    sum_sq_residue: int
    audits: Mapping[str, bool]
    primitive: Tuple[int, int, int]

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        a, b, c = self.sides
        return (c, b, a)

    def to_record(self) -> Dict[str, Any]:
        a, b, c = self.sides
        ma, mb, mc = self.medians
        return {
            "a": a, "b": b, "c": c,
            "ma": ma, "mb": mb, "mc": mc,
            "heron16": str(self.heron16),
            "area_class": self.area_class.value,
            "mod3": {
                "sides": list(self.side_residues),
                "medians": list(self.median_residues),
                "sum_sq": self.sum_sq_residue,
            },
            "audits": {k: bool(self.audits[k]) for k in AUDIT_KEYS},
            "primitive": list(self.primitive),
        }

    @classmethod
    def from_record(cls, rec: Mapping[str, Any]) -> "CertifiedMedianTriangle":
        return cls(
            sides=(int(rec["a"]), int(rec["b"]), int(rec["c"])),
            medians=(int(rec["ma"]), int(rec["mb"]), int(rec["mc"])),
            heron16=int(rec["heron16"]),
            area_class=AreaClass(rec["area_class"]),
            side_residues=tuple(rec["mod3"]["sides"]),
            median_residues=tuple(rec["mod3"]["medians"]),
            sum_sq_residue=int(rec["mod3"]["sum_sq"]),
            audits=dict(rec["audits"]),
            primitive=tuple(rec["primitive"]),
        )


def certify(T) -> CertifiedMedianTriangle:
    """Build the full record for ``T`` and run the four universal audits.

    Any audit that fails raises :class:`AuditFailure`.
    """
    if not isinstance(T, IntTriangle):
        T = IntTriangle(*T)
    medians = integer_medians(T)
    if medians is None:
        raise UnsupportedInputError(f"{T.sides} has no integer medians")
    a, b, c = T
    m_a, m_b, m_c = medians
    h16 = heron16(T)

    conditions = eight_conditions(a, b, c, m_a, m_b, m_c)
    profile = xyzw_profile(m_a, m_b, m_c, c)
    lemma2 = lemma2_check(T)
    audits = {
        "eight_conditions": conditions.all_equal and conditions.common_value == 9 * h16,
        "t_zero": profile.T_value == 0,
        "lemma2": lemma2.implication_holds,
        "nonsimilar_companion": not similarity_check(T, companion(T)),
    }
    failed = [k for k, ok in audits.items() if not ok]
    if failed:
        raise AuditFailure(f"{T.sides} failed audits {failed}")

    g = math.gcd(a, b, c)
    return CertifiedMedianTriangle(
        sides=T.sides,
        medians=medians,
        heron16=h16,
        area_class=area_class(h16),
        side_residues=tuple(residue3(s) for s in T),
        median_residues=lemma2.median_residues,
        sum_sq_residue=lemma2.sum_sq_residue,
        audits=audits,
        primitive=(a // g, b // g, c // g),
    )


def plan_shards(max_side: int, shards: int) -> List[Shard]:
    """Split ``[3, max_side]`` into contiguous ``c`` ranges of similar work.

    Work for one ``c`` grows like ``c^2``, so boundaries are spaced evenly in
    ``c^3``. Empty ranges are dropped.
    """
    lo, hi = MIN_SIDE, max_side + 1
    bounds = [lo]
    for k in range(1, shards):
        cut = round((lo ** 3 + k * (hi ** 3 - lo ** 3) / shards) ** (1 / 3))
        bounds.append(min(max(cut, bounds[-1]), hi))
    bounds.append(hi)
    return [Shard(x, y) for x, y in zip(bounds, bounds[1:]) if y > x]


@dataclass
class ShardResult:
    shard: Shard
    records: List[CertifiedMedianTriangle]
    scanned: int


def run_shard(shard: Shard, step: int = 1, backend: Optional[str] = None) -> ShardResult:
    hits, scanned = kernels.scan(shard.c_lo, shard.c_hi, step, backend)
    return ShardResult(shard, [certify(IntTriangle(*t)) for t in hits], scanned)


@dataclass
class SearchResult:
    config: SearchConfig
    records: List[CertifiedMedianTriangle]
    triples_scanned: int
    shards: List[Shard]
    backend: str
    wall_time: float
    counterexamples: List[CertifiedMedianTriangle] = field(default_factory=list)


def run_search(config: SearchConfig) -> SearchResult:
    shards = plan_shards(config.max_side, config.shards)
    step = 2 if config.use_even_filter else 1
    backend = config.backend or kernels.DEFAULT_BACKEND
    t0 = time.perf_counter()
    if len(shards) == 1:
        results = [run_shard(shards[0], step, backend)]
    else:
        with ThreadPoolExecutor(max_workers=len(shards)) as pool:
            results = list(pool.map(lambda s: run_shard(s, step, backend), shards))
    records = sorted((r for res in results for r in res.records), key=lambda r: r.sort_key)
    scanned = sum(res.scanned for res in results)
    wall = time.perf_counter() - t0
    log.info("max_side=%d shards=%d scanned=%d hits=%d in %.2fs",
             config.max_side, len(shards), scanned, len(records), wall)
    return SearchResult(
        config=config,
        records=records,
        triples_scanned=scanned,
        shards=shards,
        backend=backend,
        wall_time=wall,
        counterexamples=counterexample_scan(records),
    )


def enumerate_triangles(config: SearchConfig) -> Iterator[CertifiedMedianTriangle]:
    """Certified integer-median triangles up to ``config.max_side``, sorted by ``(c, b, a)``."""
    yield from run_search(config).records


def even_filter_soundness(max_side: int, backend: Optional[str] = None) -> bool:
    """Full unfiltered scan: does every integer-median triangle have even sides?"""
    if max_side < MIN_SIDE:
        return True
    hits, _ = kernels.scan(MIN_SIDE, max_side + 1, 1, backend)
    return all(s % 2 == 0 for t in hits for s in t)


def resolve_even_filter(mode: str, max_side: int, backend: Optional[str] = None) -> bool:
    """``auto`` enables the filter only above the calibration bound, and only
    after a full scan at that bound found no odd side."""
    if mode == "off":
        return False
    if mode != "auto":
        raise DomainError(f"even filter mode must be 'auto' or 'off', got {mode!r}")
    if max_side <= CALIBRATION_BOUND:
        return False
    return even_filter_soundness(CALIBRATION_BOUND, backend)


def _area_class_of(rec: Union[CertifiedMedianTriangle, Mapping[str, Any]]) -> AreaClass:
    if isinstance(rec, CertifiedMedianTriangle):
        return rec.area_class
    return AreaClass(rec["area_class"])


def counterexample_scan(records: Iterable) -> List:
    """Records whose area is rational (including integer)."""
    return [r for r in records if _area_class_of(r) is not AreaClass.IRRATIONAL]
