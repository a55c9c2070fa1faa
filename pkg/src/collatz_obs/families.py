"""Pattern families and the peak census.

Two moves preserve the orbit of an odd ``y`` after its first compressed step:
doubling (``2**k * y``) and lifting (``4**n * y + (4**n - 1) / 3``). The census
counts starts up to a bound whose orbit maximum equals a target, either by a
plain scan or by growing equivalence classes from seeds.
"""
from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import (
    DEFAULT_MAX_STEPS,
    UndecidedError,
    odd_part,
    orbit_stats,
    predecessors,
    require_odd,
    t_step,
)


@dataclass(frozen=True)
class FamilySpec:
    base: int
    m: int = 0
    n: int = 0

    @property
    def value(self) -> int:
        return shift_orbit(lift(self.base, self.n), self.m)


@dataclass(frozen=True, order=True)
class CensusRecord:
    start: int
    peak: int
    odd_steps: int


@dataclass(frozen=True)
class CensusResult:
    bound: int
    target_peak: int
    records: tuple[CensusRecord, ...] = field(default=())
    method: str = "brute"

    @property
    def count(self) -> int:
        return len(self.records)

    @property
    def starts(self) -> list[int]:
        return [r.start for r in self.records]


def shift_orbit(y: int, k: int) -> int:
    require_odd(y, "y")
    if k < 0:
        raise ValueError("shift must be nonnegative")
    return y << k


def lift(y: int, n: int) -> int:
    require_odd(y, "y")
    if n < 0:
        raise ValueError("lift depth must be nonnegative")
    p = 4**n
    return p * y + (p - 1) // 3


def enumerate_family(base: int, bound: int) -> list[int]:
    require_odd(base, "base")
    out = []
    z = base
    while z <= bound:
        w = z
        while w <= bound:
            out.append(w)
            w <<= 1
        z = 4 * z + 1
    return sorted(out)


def start_stats(s: int, max_steps: int = DEFAULT_MAX_STEPS) -> CensusRecord:
    """Peak and odd-step count for any positive start.

    Halvings only descend, so an even start contributes itself and then
    behaves like its odd part. The odd-step count of 1 is 0 here.
    """
    if s < 1:
        raise ValueError(f"start must be positive, got {s}")
    o = odd_part(s)
    if o == 1:
        return CensusRecord(s, s, 0)
    try:
        n, top = orbit_stats(o, max_steps)
    except UndecidedError:
        raise UndecidedError(s, max_steps) from None
    return CensusRecord(s, max(s, top), n)


def _scan(lo: int, hi: int, target_peak: int, max_steps: int) -> list[CensusRecord]:
    out = []
    for s in range(lo, hi + 1):
        rec = start_stats(s, max_steps)
        if rec.peak == target_peak:
            out.append(rec)
    return out


def _scan_job(args):
    return _scan(*args)


def partition(bound: int, parts: int) -> list[tuple[int, int]]:
    """Split ``1..bound`` into at most ``parts`` contiguous nonempty ranges."""
    parts = max(1, min(parts, bound))
    q, r = divmod(bound, parts)
    out, lo = [], 1
    for i in range(parts):
        hi = lo + q - 1 + (1 if i < r else 0)
        out.append((lo, hi))
        lo = hi + 1
    return out


def census_brute(bound: int, target_peak: int, parallel: int = 1,
                 max_steps: int = DEFAULT_MAX_STEPS) -> CensusResult:
    """Scan every start in ``1..bound`` and keep those peaking at ``target_peak``.

    With ``parallel > 1`` the range is split across worker processes; the
    merged result does not depend on the split.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if parallel < 1:
        raise ValueError("parallel must be >= 1")
    jobs = [(lo, hi, target_peak, max_steps) for lo, hi in partition(bound, parallel)]
    if len(jobs) == 1:
        chunks = [_scan_job(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            chunks = list(pool.map(_scan_job, jobs))
    records = sorted(r for chunk in chunks for r in chunk)
    return CensusResult(bound, target_peak, tuple(records), "brute")


def _pre_peak_iterates(seed: int, target_peak: int) -> list[int]:
    """Odd iterates of the seed up to the one whose 3m+1 is the peak."""
    cur = odd_part(seed)
    out = [cur]
    if cur == 1 or seed == target_peak:
        return out
    while cur != 1 and 3 * cur + 1 < target_peak:
        cur = t_step(cur).after
        out.append(cur)
    return out


def _fall_closure(roots: list[int], limit: int) -> set[int]:
    """Odd numbers <= ``limit`` reachable backwards from ``roots`` inside ``limit``."""
    max_v = max(1, (3 * limit + 1).bit_length())
    seen = {r for r in roots if r <= limit}
    queue = deque(seen)
    while queue:
        m = queue.popleft()
        for y in predecessors(m, max_v):
            if y > limit:
                break
            if y not in seen and y != m:
                seen.add(y)
                queue.append(y)
    return seen


def census_classes(bound: int, target_peak: int,
                   max_steps: int = DEFAULT_MAX_STEPS) -> CensusResult:
    """Census by class closure.

    Take the smallest start not yet considered. If it qualifies, every odd
    iterate before its peak, everything that falls onto those iterates, and
    the doubling/lifting families of all of them are candidates. Candidates
    are re-verified, so the closure only has to be a good guess; anything it
    misses is picked up later as a seed.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    considered: set[int] = set()
    found: dict[int, CensusRecord] = {}
    # odd iterates on a path peaking at P satisfy 3m+1 <= P
    limit = max(bound, (target_peak - 1) // 3)
    for seed in range(1, bound + 1):
        if seed in considered:
            continue
        rec = start_stats(seed, max_steps)
        considered.add(seed)
        if rec.peak != target_peak:
            continue
        found[seed] = rec
        path = _pre_peak_iterates(seed, target_peak)
        nodes = _fall_closure(path, limit) | set(path)
        for z in sorted(nodes):
            for c in enumerate_family(z, bound):
                if c in considered:
                    continue
                considered.add(c)
                crec = start_stats(c, max_steps)
                if crec.peak == target_peak:
                    found[c] = crec
    records = tuple(found[s] for s in sorted(found))
    return CensusResult(bound, target_peak, records, "classes")


def census(bound: int, target_peak: int, method: str = "brute", parallel: int = 1,
           max_steps: int = DEFAULT_MAX_STEPS) -> CensusResult:
    if method == "brute":
        return census_brute(bound, target_peak, parallel, max_steps)
    if method == "classes":
        return census_classes(bound, target_peak, max_steps)
    raise ValueError(f"unknown census method {method!r}")


def peak_histogram(bound: int, max_steps: int = DEFAULT_MAX_STEPS) -> dict[int, int]:
    """Number of starts in ``1..bound`` per orbit peak."""
    hist: dict[int, int] = {}
    for s in range(1, bound + 1):
        p = start_stats(s, max_steps).peak
        hist[p] = hist.get(p, 0) + 1
    return hist


__all__ = [
    "CensusRecord", "CensusResult", "FamilySpec", "UndecidedError",
    "census", "census_brute", "census_classes", "enumerate_family", "lift",
    "partition", "peak_histogram", "shift_orbit", "start_stats",
]
