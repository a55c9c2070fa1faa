"""Exact kernel for the compressed 3x+1 map on positive odd integers.

``T(x) = (3x + 1) / 2**v`` where ``v`` is the full 2-adic valuation of
``3x + 1``, so every iterate is odd. All arithmetic is on Python ints.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

DEFAULT_MAX_STEPS = 10**6


class UndecidedError(RuntimeError):
    """Raised when an orbit does not reach 1 within the step budget."""

    def __init__(self, start: int, budget: int):
        super().__init__(f"orbit of {start} did not reach 1 within {budget} steps")
        self.start = start
        self.budget = budget


def require_odd(x: int, name: str = "x") -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError(f"{name} must be an int, got {type(x).__name__}")
    if x < 1 or x % 2 == 0:
        raise ValueError(f"{name} must be a positive odd integer, got {x}")
    return x


def v2(m: int) -> int:
    """Exponent of the largest power of 2 dividing ``m`` (``m >= 1``)."""
    if m < 1:
        raise ValueError(f"2-adic valuation undefined for {m}")
    return (m & -m).bit_length() - 1


def odd_part(m: int) -> int:
    if m < 1:
        raise ValueError(f"odd part undefined for {m}")
    return m >> v2(m)


@dataclass(frozen=True)
class StepRecord:
    before: int
    valuation: int
    after: int


class ResidueClass(enum.Enum):
    FALL = "fall"
    RISE = "rise"
    FIXED_POINT = "fixed_point"


@dataclass(frozen=True)
class Trajectory:
    start: int
    steps: tuple[StepRecord, ...] = field(default=())
    reached_one: bool = False

    @property
    def odd_step_count(self) -> int:
        return len(self.steps)

    @property
    def iterates(self) -> list[int]:
        """Odd iterates including the start."""
        return [self.start] + [s.after for s in self.steps]

    @property
    def valuations(self) -> list[int]:
        return [s.valuation for s in self.steps]

    @property
    def peak(self) -> int:
        # largest value of the uncompressed orbit: the 3m+1 values dominate
        # every halving that follows them
        return max([self.start] + [3 * s.before + 1 for s in self.steps])


def t_step(x: int) -> StepRecord:
    require_odd(x)
    m = 3 * x + 1
    v = v2(m)
    return StepRecord(x, v, m >> v)


def t(x: int) -> int:
    return t_step(x).after


def classify(x: int) -> ResidueClass:
    require_odd(x)
    if x == 1:
        return ResidueClass.FIXED_POINT
    return ResidueClass.FALL if x % 4 == 1 else ResidueClass.RISE


def trajectory(x: int, max_steps: int = DEFAULT_MAX_STEPS) -> Trajectory:
    """Iterate ``t_step`` from ``x`` until 1 appears or ``max_steps`` runs out.

    The trajectory of 1 is stored with no steps. An exhausted budget is not an
    error; ``reached_one`` is simply left False.
    """
    require_odd(x)
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    if x == 1:
        return Trajectory(1, (), True)
    steps = []
    cur = x
    for _ in range(max_steps):
        rec = t_step(cur)
        steps.append(rec)
        cur = rec.after
        if cur == 1:
            return Trajectory(x, tuple(steps), True)
    return Trajectory(x, tuple(steps), False)


def _orbit_summary(x: int, max_steps: int) -> tuple[int, int]:
    """(steps_to_one, peak) without materialising step records."""
    require_odd(x)
    if x == 1:
        return 1, 1
    cur, top = x, x
    for n in range(1, max_steps + 1):
        m = 3 * cur + 1
        if m > top:
            top = m
        cur = m >> ((m & -m).bit_length() - 1)
        if cur == 1:
            return n, top
    raise UndecidedError(x, max_steps)


def steps_to_one(x: int, max_steps: int = DEFAULT_MAX_STEPS) -> int:
    """Number of T applications until 1 is first produced; 1 maps to 1 in one step."""
    return _orbit_summary(x, max_steps)[0]


def peak(x: int, max_steps: int = DEFAULT_MAX_STEPS) -> int:
    """Maximum of the standard (uncompressed) orbit of odd ``x`` down to 1."""
    return _orbit_summary(x, max_steps)[1]


def orbit_stats(x: int, max_steps: int = DEFAULT_MAX_STEPS) -> tuple[int, int]:
    return _orbit_summary(x, max_steps)


def predecessors(m: int, max_valuation: int) -> list[int]:
    """Odd ``y`` with ``T(y) = m`` using a valuation of at most ``max_valuation``."""
    require_odd(m, "m")
    if max_valuation < 1:
        raise ValueError("max_valuation must be positive")
    if m % 3 == 0:
        return []
    out = []
    for v in range(1, max_valuation + 1):
        num = (m << v) - 1
        if num % 3 == 0:
            y = num // 3
            if y % 2 == 1:
                out.append(y)
    return out
