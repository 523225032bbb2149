"""Inner scan kernels for integer-median triangles.

A kernel scans every triple ``a <= b <= c`` with ``a + b > c`` and
``c_lo <= c < c_hi`` and returns those whose three median discriminants
``2a^2 + 2b^2 - c^2`` (and its permutations) are ``4 m^2`` for integers
``m``. With ``step=2`` only all-even triples are visited.

Three implementations share that contract:

* ``scan_numba``: compiled loops, ``int64`` arithmetic.
* ``scan_numpy``: vectorized per ``c``, ``int64`` arithmetic.
* ``scan_reference``: plain Python integers, used to cross-check the others.

The fixed-width kernels are only used below :data:`FAST_PATH_LIMIT`, where
every discriminant stays below ``2**52`` and its float square root is off by
at most one before correction.
"""

from __future__ import annotations

import math
from typing import Tuple

import numpy as np

from medtri._jit import njit, use_numba

FAST_PATH_LIMIT = 1 << 25

# Residues of 4*k^2: a discriminant can only be 4 m^2 if it hits both tables.
QR4_MOD64 = np.zeros(64, dtype=np.bool_)
QR4_MOD64[[(4 * k * k) % 64 for k in range(64)]] = True
QR4_MOD63 = np.zeros(63, dtype=np.bool_)
QR4_MOD63[[(4 * k * k) % 63 for k in range(63)]] = True

_EMPTY = np.empty((0, 3), dtype=np.int64)


def _align(x: int, step: int) -> int:
    return x + (x % step)


@njit(cache=True, nogil=True)
def _root_is_exact(d):
    r = np.int64(np.sqrt(np.float64(d)))
    while r * r > d:
        r -= 1
    while (r + 1) * (r + 1) <= d:
        r += 1
    return r * r == d


# The residue tests are written out at each call site: routing them through a
# helper that takes the tables as arguments costs over 10x in the inner loop.
# A table hit implies d = 0 (mod 4), so an exact root is automatically even.


@njit(cache=True, nogil=True)
def _is_hit_numba(a, b, c, t64, t63):
    a2 = a * a
    b2 = b * b
    c2 = c * c
    d = 2 * a2 + 2 * b2 - c2
    if d <= 0 or not t64[d & 63] or not t63[d % 63] or not _root_is_exact(d):
        return False
    d = 2 * a2 + 2 * c2 - b2
    if d <= 0 or not t64[d & 63] or not t63[d % 63] or not _root_is_exact(d):
        return False
    d = 2 * b2 + 2 * c2 - a2
    return d > 0 and t64[d & 63] and t63[d % 63] and _root_is_exact(d)


@njit(cache=True, nogil=True)
def _scan_numba(c_lo, c_hi, step, t64, t63):
    cap = 64
    out = np.empty((cap, 3), dtype=np.int64)
    n = 0
    scanned = 0
    c_start = c_lo + (c_lo % step)
    for c in range(c_start, c_hi, step):
        c2 = c * c
        b0 = c // 2 + 1
        b0 += b0 % step
        for b in range(b0, c + 1, step):
            b2 = b * b
            a0 = c - b + 1
            a0 += a0 % step
            for a in range(a0, b + 1, step):
                scanned += 1
                a2 = a * a
                d = 2 * a2 + 2 * b2 - c2
                if d <= 0 or not t64[d & 63] or not t63[d % 63] or not _root_is_exact(d):
                    continue
                d = 2 * a2 + 2 * c2 - b2
                if d <= 0 or not t64[d & 63] or not t63[d % 63] or not _root_is_exact(d):
                    continue
                d = 2 * b2 + 2 * c2 - a2
                if d <= 0 or not t64[d & 63] or not t63[d % 63] or not _root_is_exact(d):
                    continue
                if n == cap:
                    grown = np.empty((cap * 2, 3), dtype=np.int64)
                    grown[:cap] = out
                    out = grown
                    cap *= 2
                out[n, 0] = a
                out[n, 1] = b
                out[n, 2] = c
                n += 1
    return out[:n].copy(), scanned


def _check_args(c_lo: int, c_hi: int, step: int) -> None:
    if step not in (1, 2):
        raise ValueError(f"step must be 1 or 2, got {step}")
    if c_hi - 1 > FAST_PATH_LIMIT:
        raise OverflowError(f"fixed-width kernels are limited to c <= {FAST_PATH_LIMIT}")
    if c_lo < 1:
        raise ValueError(f"c_lo must be positive, got {c_lo}")


def scan_numba(c_lo: int, c_hi: int, step: int = 1) -> Tuple[np.ndarray, int]:
    _check_args(c_lo, c_hi, step)
    hits, scanned = _scan_numba(np.int64(c_lo), np.int64(c_hi), np.int64(step), QR4_MOD64, QR4_MOD63)
    return hits, int(scanned)


def is_hit_numba(a: int, b: int, c: int) -> bool:
    return bool(_is_hit_numba(np.int64(a), np.int64(b), np.int64(c), QR4_MOD64, QR4_MOD63))


def _four_square_mask(d: np.ndarray) -> np.ndarray:
    mask = (d > 0) & QR4_MOD64[d & 63] & QR4_MOD63[d % 63]
    if not mask.any():
        return mask
    dm = d[mask]
    r = np.floor(np.sqrt(dm.astype(np.float64))).astype(np.int64)
    r -= r * r > dm
    r += (r + 1) * (r + 1) <= dm
    mask[mask] = r * r == dm
    return mask


def _pairs_for_c(c: int, step: int) -> Tuple[np.ndarray, np.ndarray]:
    b0 = _align(c // 2 + 1, step)
    b = np.arange(b0, c + 1, step, dtype=np.int64)
    a0 = c - b + 1
    a0 += a0 % step
    counts = np.where(a0 <= b, (b - a0) // step + 1, 0)
    total = int(counts.sum())
    if total == 0:
        return _EMPTY[:, 0], _EMPTY[:, 0]
    starts = np.cumsum(counts) - counts
    offsets = np.arange(total, dtype=np.int64) - np.repeat(starts, counts)
    return np.repeat(a0, counts) + step * offsets, np.repeat(b, counts)


def scan_numpy(c_lo: int, c_hi: int, step: int = 1) -> Tuple[np.ndarray, int]:
    _check_args(c_lo, c_hi, step)
    chunks = []
    scanned = 0
    for c in range(_align(c_lo, step), c_hi, step):
        a, b = _pairs_for_c(c, step)
        scanned += a.size
        if a.size == 0:
            continue
        a2, b2, c2 = a * a, b * b, c * c
        keep = _four_square_mask(2 * a2 + 2 * b2 - c2)
        a, b, a2, b2 = a[keep], b[keep], a2[keep], b2[keep]
        keep = _four_square_mask(2 * a2 + 2 * c2 - b2)
        a, b, a2, b2 = a[keep], b[keep], a2[keep], b2[keep]
        keep = _four_square_mask(2 * b2 + 2 * c2 - a2)
        if keep.any():
            a, b = a[keep], b[keep]
            chunks.append(np.stack([a, b, np.full_like(a, c)], axis=1))
    hits = np.concatenate(chunks) if chunks else _EMPTY.copy()
    return hits, scanned


def is_hit_reference(a: int, b: int, c: int) -> bool:
    """Exact test with Python integers and :func:`math.isqrt`."""
    for d in (2 * a * a + 2 * b * b - c * c, 2 * a * a + 2 * c * c - b * b, 2 * b * b + 2 * c * c - a * a):
        if d <= 0:
            return False
        r = math.isqrt(d)
        if r * r != d or r % 2:
            return False
    return True


def scan_reference(c_lo: int, c_hi: int, step: int = 1) -> Tuple[list, int]:
    if step not in (1, 2):
        raise ValueError(f"step must be 1 or 2, got {step}")
    hits = []
    scanned = 0
    for c in range(_align(c_lo, step), c_hi, step):
        for b in range(_align(c // 2 + 1, step), c + 1, step):
            for a in range(_align(c - b + 1, step), b + 1, step):
                scanned += 1
                if is_hit_reference(a, b, c):
                    hits.append((a, b, c))
    return hits, scanned


BACKENDS = {"numba": scan_numba, "numpy": scan_numpy}
DEFAULT_BACKEND = "numba" if use_numba else "numpy"


def scan(c_lo: int, c_hi: int, step: int = 1, backend: str = None) -> Tuple[list, int]:
    """Scan with the selected backend, returning hits as sorted int tuples.

    Ranges past :data:`FAST_PATH_LIMIT` fall back to the reference scan.
    """
    if c_hi - 1 > FAST_PATH_LIMIT:
        hits, scanned = scan_reference(c_lo, c_hi, step)
    else:
        arr, scanned = BACKENDS[backend or DEFAULT_BACKEND](c_lo, c_hi, step)
        hits = [tuple(int(v) for v in row) for row in arr]
    hits.sort(key=lambda t: (t[2], t[1], t[0]))
    return hits, scanned
