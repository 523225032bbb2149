"""Record files, run manifests, config files and CSV summaries."""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any, Dict, IO, Iterable, List, Mapping, Union

from medtri.search.engine import CertifiedMedianTriangle, SearchResult

PathLike = Union[str, Path]

CONFIG_KEYS = {"max_side", "shards", "even_filter", "out"}


def record_line(rec: CertifiedMedianTriangle) -> str:
    return json.dumps(rec.to_record()) + "\n"


def write_records(path: PathLike, records: Iterable[CertifiedMedianTriangle]) -> int:
    """Write one JSON object per line; returns the number of lines."""
    n = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(record_line(rec))
            fh.flush()
            n += 1
    return n


def read_records(path: PathLike) -> List[Dict[str, Any]]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: {exc.msg}") from exc
    return out


def manifest_path(records_path: PathLike) -> Path:
    return Path(records_path).with_suffix(".manifest.json")


def build_manifest(result: SearchResult, version: str, even_filter_mode: str) -> Dict[str, Any]:
    cfg = result.config
    return {
        "tool": "medtri",
        "version": version,
        "config": {
            "max_side": cfg.max_side,
            "shards": cfg.shards,
            "even_filter": even_filter_mode,
            "out": str(cfg.output_path),
        },
        "bound": cfg.max_side,
        "shard_count": len(result.shards),
        "shards": [[s.c_lo, s.c_hi] for s in result.shards],
        "even_filter_used": cfg.use_even_filter,
        "backend": result.backend,
        "wall_time_s": round(result.wall_time, 6),
        "counts": {
            "triples_scanned": result.triples_scanned,
            "hits": len(result.records),
            "counterexamples": len(result.counterexamples),
        },
        "counterexamples": [list(r.sides) for r in result.counterexamples],
    }


def write_manifest(path: PathLike, manifest: Mapping[str, Any]) -> None:
    Path(path).write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")


def read_config_file(path: PathLike) -> Dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out: Dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


SUMMARY_FIELDS = [
    "a", "b", "c", "ma", "mb", "mc", "heron16", "area_class",
    "sides_mod3", "medians_mod3", "sum_sq_mod3", "primitive", "all_audits",
]


def write_summary_csv(records: Iterable[Mapping[str, Any]], fh: IO[str]) -> int:
    writer = csv.DictWriter(fh, fieldnames=SUMMARY_FIELDS, lineterminator="\n")
    writer.writeheader()
    n = 0
    for rec in records:
        writer.writerow({
            "a": rec["a"], "b": rec["b"], "c": rec["c"],
            "ma": rec["ma"], "mb": rec["mb"], "mc": rec["mc"],
            "heron16": rec["heron16"],
            "area_class": rec["area_class"],
            "sides_mod3": " ".join(map(str, rec["mod3"]["sides"])),
            "medians_mod3": " ".join(map(str, rec["mod3"]["medians"])),
            "sum_sq_mod3": rec["mod3"]["sum_sq"],
            "primitive": " ".join(map(str, rec["primitive"])),
            "all_audits": all(rec["audits"].values()),
        })
        n += 1
    return n
