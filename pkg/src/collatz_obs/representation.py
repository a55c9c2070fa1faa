"""Exponent representations of odd numbers that reach 1.

If the compressed orbit of ``x`` has valuations ``v_1..v_{k+1}`` and
``n_i = v_1 + ... + v_i`` then

    x = (2**n_{k+1} - sum_{i=0..k} 3**(k-i) * 2**n_i) / 3**(k+1),   n_0 = 0.

Conversely, an increasing exponent list whose value is an integer describes a
genuine orbit, and the list is the shortest one for that ``x`` exactly when the
last gap is not 2 (a last gap of 2 means the orbit sat on 1 for one step).
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    DEFAULT_MAX_STEPS,
    UndecidedError,
    require_odd,
    steps_to_one,
    trajectory,
)


class NonMinimalWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Representation:
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        e = self.exponents
        if not e:
            raise ValueError("exponent list is empty")
        if e[0] < 1:
            raise ValueError(f"exponents must be >= 1, got {e}")
        if any(b <= a for a, b in zip(e, e[1:])):
            raise ValueError(f"exponents must be strictly increasing, got {e}")

    @property
    def k(self) -> int:
        return len(self.exponents) - 1

    @property
    def minimal(self) -> bool:
        e = self.exponents
        return len(e) == 1 or e[-1] - e[-2] != 2

    @property
    def valuations(self) -> list[int]:
        e = (0,) + self.exponents
        return [b - a for a, b in zip(e, e[1:])]


@dataclass(frozen=True)
class EvalResult:
    numerator: int
    denominator: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def integral(self) -> bool:
        return self.numerator % self.denominator == 0

    @property
    def valid(self) -> bool:
        return self.numerator > 0

    @property
    def value(self) -> int | None:
        if self.integral and self.valid:
            return self.numerator // self.denominator
        return None


def extract_representation(x: int, max_steps: int = DEFAULT_MAX_STEPS) -> Representation:
    require_odd(x)
    if x == 1:
        return Representation((2,))
    traj = trajectory(x, max_steps)
    if not traj.reached_one:
        raise UndecidedError(x, max_steps)
    return Representation(tuple(itertools.accumulate(traj.valuations)))


def numerator_of(exponents) -> int:
    e = tuple(exponents)
    k = len(e) - 1
    lower = (0,) + e[:-1]
    return (1 << e[-1]) - sum(3 ** (k - i) << n for i, n in enumerate(lower))


def eval_representation(r: Representation | tuple[int, ...]) -> EvalResult:
    if not isinstance(r, Representation):
        r = Representation(tuple(r))
    if not r.minimal:
        warnings.warn(f"{r.exponents} ends with a gap of 2 (padded by a 1 -> 1 step)",
                      NonMinimalWarning, stacklevel=2)
    return EvalResult(numerator_of(r.exponents), 3 ** (r.k + 1))


def verify_representation(x: int, r: Representation | tuple[int, ...],
                          max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """True iff ``r`` evaluates to ``x`` and matches the orbit's valuations."""
    try:
        if not isinstance(r, Representation):
            r = Representation(tuple(r))
        require_odd(x)
    except (TypeError, ValueError):
        return False
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonMinimalWarning)
        if eval_representation(r).value != x:
            return False
    try:
        return extract_representation(x, max_steps) == r
    except UndecidedError:
        return False


def _steps_or_none(x: int, max_steps: int) -> int | None:
    try:
        return steps_to_one(x, max_steps)
    except UndecidedError:
        return None


def step_table(lo: int, hi: int, max_steps: int = DEFAULT_MAX_STEPS) -> dict[int, int | None]:
    """steps_to_one for every odd number in ``[lo, hi]``; None when undecided."""
    lo = max(lo, 1)
    start = lo if lo % 2 else lo + 1
    return {x: _steps_or_none(x, max_steps) for x in range(start, hi + 1, 2)}


def u_set(j: int, bound: int, max_steps: int = DEFAULT_MAX_STEPS) -> list[int]:
    """Odd x <= bound reaching 1 in exactly j compressed steps."""
    if j < 1:
        raise ValueError("j must be >= 1")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return [x for x, s in step_table(1, bound, max_steps).items() if s == j]


def u_set_by_exponents(j: int, bound: int) -> list[int]:
    """Same set as ``u_set`` found by enumerating exponent tuples.

    Exponential in ``j``; meant as a cross-check at small sizes. For x <= bound
    the top exponent satisfies 2**n_top < 2 * 3**j * bound for small j.
    """
    if j < 1 or bound < 1:
        raise ValueError("j and bound must be >= 1")
    top = (3**j * bound).bit_length() + 1
    den = 3**j
    out = set()
    for e in itertools.combinations(range(1, top + 1), j):
        if j > 1 and e[-1] - e[-2] == 2:
            continue
        num = numerator_of(e)
        if num > 0 and num % den == 0 and num // den <= bound:
            out.add(num // den)
    return sorted(out)


@dataclass(frozen=True)
class PartitionReport:
    bound: int
    j_max: int
    members: dict[int, tuple[int, ...]]
    leftovers: tuple[int, ...]
    multiples: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.leftovers and not self.multiples

    @property
    def covered(self) -> int:
        return sum(len(v) for v in self.members.values())


def partition_check(bound: int, j_max: int, max_steps: int = DEFAULT_MAX_STEPS) -> PartitionReport:
    if bound < 1 or j_max < 1:
        raise ValueError("bound and j_max must be >= 1")
    table = step_table(1, bound, max_steps)
    members: dict[int, list[int]] = {}
    seen: dict[int, int] = {}
    for j in range(1, j_max + 1):
        for x, s in table.items():
            if s == j:
                members.setdefault(j, []).append(x)
                seen[x] = seen.get(x, 0) + 1
    leftovers = tuple(x for x in table if x not in seen)
    multiples = tuple(x for x, c in seen.items() if c > 1)
    return PartitionReport(bound, j_max, {j: tuple(v) for j, v in members.items()},
                           leftovers, multiples)


@dataclass(frozen=True)
class BracketRow:
    i: int
    lower: int | None
    upper: int | None

    x0: int

    @property
    def gap_below(self) -> int | None:
        return None if self.lower is None else self.x0 - self.lower

    @property
    def gap_above(self) -> int | None:
        return None if self.upper is None else self.upper - self.x0

    @property
    def contains_x0(self) -> bool:
        return self.lower == self.x0


@dataclass(frozen=True)
class BracketReport:
    x0: int
    k: int
    window: int
    rows: tuple[BracketRow, ...]


def bracket_experiment(x0: int, window: int = 10**4,
                       max_steps: int = DEFAULT_MAX_STEPS) -> BracketReport:
    """Nearest members of each U_i around ``x0`` within ``x0 +- window``.

    ``lower`` is the nearest member at or below ``x0`` (so it is ``x0`` itself in
    the last row), ``upper`` the nearest member strictly above.
    """
    require_odd(x0, "x0")
    if window < 1:
        raise ValueError("window must be positive")
    k = steps_to_one(x0, max_steps)
    table = step_table(x0 - window, x0 + window, max_steps)
    rows = []
    for i in range(1, k + 1):
        below = [x for x, s in table.items() if s == i and x <= x0]
        above = [x for x, s in table.items() if s == i and x > x0]
        rows.append(BracketRow(i, max(below, default=None), min(above, default=None), x0))
    return BracketReport(x0, k, window, tuple(rows))
