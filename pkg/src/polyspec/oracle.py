"""Brute-force enumeration oracle.

Everything here is deliberately naive: scan the integer bounding box of a
dilate, test each point against the scaled facet inequalities, and tally.
The closed-form paths elsewhere in the package are checked against these
counts; nothing here shares code with them beyond the geometry container.

The inner loop runs on int64 numpy arrays when a conservative overflow bound
allows it, and falls back to arbitrary-precision Python integers otherwise,
so results are exact either way. Boxes larger than the configured cap raise
a typed error rather than truncating.
"""

from __future__ import annotations

import itertools
import math
import operator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import EnumerationTooLarge, InternalInconsistency
from .exact import FracPoly, RatPoly
from .geometry import HPolytope

DEFAULT_CAP = 100_000_000

# Target number of candidate points per processed slab; bounds peak memory.
_CHUNK_TARGET = 1 << 21

# Conservative bound under which int64 dot products cannot overflow.
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class DilateCount:
    """Lattice-point tallies of one dilate: total, boundary and interior."""

    m: int
    count: int
    boundary_count: int
    interior_count: int

    def __post_init__(self) -> None:
        if self.count != self.boundary_count + self.interior_count:
            raise InternalInconsistency(
                f"count {self.count} != boundary {self.boundary_count} "
                f"+ interior {self.interior_count}"
            )


def _box_ranges(h: HPolytope, m: int) -> tuple[list[int], list[int]]:
    los, his = [], []
    for d in range(h.dim):
        coords = [v[d] for v in h.vertices]
        los.append(m * min(coords))
        his.append(m * max(coords))
    return los, his


def _scan_python(
    rows: Sequence[Sequence[int]],
    los: Sequence[int],
    his: Sequence[int],
    bound: int,
) -> dict[int, int]:
    hist: dict[int, int] = {}
    ranges = [range(lo, hi + 1) for lo, hi in zip(los, his)]
    for pt in itertools.product(*ranges):
        t = max(sum(w * x for w, x in zip(row, pt)) for row in rows)
        if t <= bound:
            hist[t] = hist.get(t, 0) + 1
    return hist


def _scan_numpy(
    rows: Sequence[Sequence[int]],
    los: Sequence[int],
    his: Sequence[int],
    bound: int,
    jobs: int,
) -> dict[int, int]:
    normals = np.array(rows, dtype=np.int64)
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(los, his)]
    per_row = math.prod(len(a) for a in axes[1:])
    chunk = max(1, _CHUNK_TARGET // max(per_row, 1))
    slabs = [axes[0][i : i + chunk] for i in range(0, len(axes[0]), chunk)]

    def tally(xs: np.ndarray) -> dict[int, int]:
        grids = np.meshgrid(xs, *axes[1:], indexing="ij")
        points = np.stack([g.reshape(-1) for g in grids], axis=1)
        values = (points @ normals.T).max(axis=1)
        values = values[values <= bound]
        uniq, counts = np.unique(values, return_counts=True)
        return {int(v): int(c) for v, c in zip(uniq, counts)}

    if jobs > 1 and len(slabs) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(tally, slabs))
    else:
        partials = [tally(xs) for xs in slabs]

    # Integer tallies merged by addition: deterministic whatever the schedule.
    merged: dict[int, int] = {}
    for part in partials:
        for key, value in part.items():
            merged[key] = merged.get(key, 0) + value
    return merged


def _scan_histogram(
    h: HPolytope,
    m: int,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    force_python: bool = False,
) -> tuple[dict[int, int], int]:
    """Histogram of scaled nu-values T = nu * L over lattice points of the
    m-th dilate; returns (histogram, L)."""
    m = operator.index(m)
    if m < 0:
        raise ValueError(f"dilation factor must be nonnegative, got {m}")
    los, his = _box_ranges(h, m)
    total = math.prod(hi - lo + 1 for lo, hi in zip(los, his))
    if total > cap:
        raise EnumerationTooLarge(
            f"bounding box of dilate {m} holds {total} candidate points, "
            f"which exceeds the cap of {cap}"
        )
    ws, ls, common = h.scaled_normals
    rows = [
        tuple(w * (common // lf) for w in row) for row, lf in zip(ws, ls)
    ]
    bound = m * common
    maxabs = [max(abs(lo), abs(hi)) for lo, hi in zip(los, his)]
    safe = abs(bound) < _INT64_SAFE and all(
        sum(abs(w) * a for w, a in zip(row, maxabs)) < _INT64_SAFE
        for row in rows
    )
    if force_python or not safe:
        return _scan_python(rows, los, his, bound), common
    return _scan_numpy(rows, los, his, bound, jobs), common


def count_dilate(
    h: HPolytope,
    m: int,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    force_python: bool = False,
) -> DilateCount:
    """Count lattice points of the m-th dilate by scanning its bounding box.

    A point is in the dilate iff every scaled facet form is at most m; it is
    on the boundary iff some facet form attains m exactly.
    """
    hist, common = _scan_histogram(h, m, cap=cap, jobs=jobs, force_python=force_python)
    boundary = hist.get(m * common, 0)
    count = sum(hist.values())
    return DilateCount(
        m=m, count=count, boundary_count=boundary, interior_count=count - boundary
    )


def dilate_counts(
    h: HPolytope,
    m_max: int,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> list[DilateCount]:
    """Counts for every dilate 0..m_max."""
    return [count_dilate(h, m, cap=cap, jobs=jobs) for m in range(m_max + 1)]


def nu_histogram(
    h: HPolytope,
    m: int,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    force_python: bool = False,
) -> FracPoly:
    """Sum of z**nu(v) over all lattice points v with nu(v) <= m.

    The coefficient of z**b counts the points at facet-distance exactly b;
    partial sums at integer exponents recover the dilate counts.
    """
    hist, common = _scan_histogram(h, m, cap=cap, jobs=jobs, force_python=force_python)
    return FracPoly({Fraction(t, common): c for t, c in hist.items()})


def weighted_count(
    h: HPolytope,
    m: int,
    alpha: Fraction | int | str,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> int:
    """Number of lattice points of the m-th dilate whose fractional weight
    nu(v) - ceil(nu(v)) equals alpha in (-1, 0]."""
    alpha = Fraction(alpha)
    if not (-1 < alpha <= 0):
        raise ValueError(f"weight class must lie in (-1, 0], got {alpha}")
    hist, common = _scan_histogram(h, m, cap=cap, jobs=jobs)
    total = 0
    for t, c in hist.items():
        nu = Fraction(t, common)
        if nu - math.ceil(nu) == alpha:
            total += c
    return total


def spectrum_by_enumeration(
    h: HPolytope,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    force_python: bool = False,
) -> FracPoly:
    """Spectrum of the polytope straight from the definition.

    Scans the (n+1)-st dilate, histograms nu, multiplies by (1 - z)**n and
    keeps exponents up to n. The spectrum is supported in [0, n], so the
    computed coefficients on (n, n+1] must vanish; a nonzero one means a bug
    and raises InternalInconsistency instead of being discarded silently.
    """
    n = h.dim
    series = nu_histogram(h, n + 1, cap=cap, jobs=jobs, force_python=force_python)
    full = series.mul_one_minus_z_pow(n)
    window = full.restrict(n, n + 1, include_lo=False, include_hi=True)
    if window:
        raise InternalInconsistency(
            f"enumeration produced spectrum mass above degree {n}: {window.to_text()}"
        )
    return full.restrict(0, n)


def ehrhart_by_interpolation(
    h: HPolytope,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> RatPoly:
    """Counting polynomial through the points (m, count(m)) for m = 0..n.

    Exact Lagrange interpolation on the fixed nodes 0..n, so repeated runs
    give identical output.
    """
    n = h.dim
    counts = [count_dilate(h, m, cap=cap, jobs=jobs).count for m in range(n + 1)]
    poly = RatPoly.zero()
    for m, y in enumerate(counts):
        if y == 0:
            continue
        basis = RatPoly([1])
        denom = 1
        for k in range(n + 1):
            if k == m:
                continue
            basis = basis * RatPoly([-k, 1])
            denom *= m - k
        poly = poly + basis * Fraction(y, denom)
    return poly


def delta_by_series(
    h: HPolytope,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> list[int]:
    """Delta-vector as the degree-<=n part of (1 - z)^(n+1) times the count
    series: delta_j = sum_i (-1)^i C(n+1, i) count(j - i)."""
    n = h.dim
    counts = [count_dilate(h, m, cap=cap, jobs=jobs).count for m in range(n + 1)]
    return [
        sum((-1) ** i * math.comb(n + 1, i) * counts[j - i] for i in range(j + 1))
        for j in range(n + 1)
    ]
