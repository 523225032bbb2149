from medtri.search.engine import (
    CALIBRATION_BOUND,
    CertifiedMedianTriangle,
    SearchConfig,
    SearchResult,
    Shard,
    certify,
    counterexample_scan,
    enumerate_triangles,
    even_filter_soundness,
    plan_shards,
    resolve_even_filter,
    run_search,
)

__all__ = [
    "CALIBRATION_BOUND",
    "CertifiedMedianTriangle",
    "SearchConfig",
    "SearchResult",
    "Shard",
    "certify",
    "counterexample_scan",
    "enumerate_triangles",
    "even_filter_soundness",
    "plan_shards",
    "resolve_even_filter",
    "run_search",
]
