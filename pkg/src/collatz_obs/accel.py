"""Rising-run decomposition and the closed-form multi-step jump.

Every odd ``y`` is uniquely ``2**n * x + 2**(n-1) - 1`` with ``n - 1 = v2(y+1)``.
The first ``n - 2`` applications of T on such a ``y`` all land on residues
3 mod 4 (except the last, which is 1 mod 4) and have a closed form, so they can
be skipped in one multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import DEFAULT_MAX_STEPS, require_odd, t_step, v2


@dataclass(frozen=True)
class Decomposition:
    x: int
    n: int
    y: int


@dataclass(frozen=True)
class JumpReport:
    input: Decomposition
    landed: int
    steps_skipped: int
    naive_equivalent_checked: bool = False


@dataclass(frozen=True)
class FastRound:
    jump: JumpReport
    after: int
    valuation: int
    peak: int


@dataclass(frozen=True)
class FastTrajectory:
    """Odd iterates actually visited by the accelerated loop.

    ``total_steps`` is the number of T applications the naive loop would
    perform (skipped plus explicit).
    """

    start: int
    rounds: tuple[FastRound, ...] = field(default=())
    reached_one: bool = False

    @property
    def visited(self) -> list[int]:
        out = [self.start]
        for r in self.rounds:
            if r.jump.landed != out[-1]:
                out.append(r.jump.landed)
            out.append(r.after)
        return out

    @property
    def total_steps(self) -> int:
        return sum(r.jump.steps_skipped + 1 for r in self.rounds)

    @property
    def steps_skipped(self) -> int:
        return sum(r.jump.steps_skipped for r in self.rounds)

    @property
    def peak(self) -> int:
        return max([self.start] + [r.peak for r in self.rounds])


def decompose(y: int) -> Decomposition:
    require_odd(y, "y")
    e = v2(y + 1)
    return Decomposition(((y + 1) >> e) // 2, e + 1, y)


def recompose(d: Decomposition | tuple[int, int]) -> int:
    x, n = (d.x, d.n) if isinstance(d, Decomposition) else d
    if n < 2:
        raise ValueError(f"rise exponent must be >= 2, got {n}")
    if x < 0:
        raise ValueError(f"quotient must be nonnegative, got {x}")
    return (x << n) + (1 << (n - 1)) - 1


def make_decomposition(x: int, n: int) -> Decomposition:
    return Decomposition(x, n, recompose((x, n)))


def rising_iterate(d: Decomposition, j: int) -> int:
    """``T^j(y)`` for ``0 <= j <= n - 2`` via the closed form."""
    if not 0 <= j <= d.n - 2:
        raise ValueError(f"closed form valid for 0 <= j <= {d.n - 2}, got {j}")
    p = 3**j
    return ((p * d.x + (p - 1) // 2) << (d.n - j)) + (1 << (d.n - j - 1)) - 1


def jump(d: Decomposition, check: bool = False) -> JumpReport:
    """Skip the ``n - 2`` guaranteed rising steps of ``d.y`` in one go.

    With ``check`` the landing value is confirmed by naive iteration.
    """
    if d.n < 2 or recompose(d) != d.y:
        raise ValueError(f"inconsistent decomposition {d}")
    k = d.n - 2
    p = 3**k
    landed = 4 * (p * d.x + (p - 1) // 2) + 1
    if check:
        cur = d.y
        for _ in range(k):
            cur = t_step(cur).after
        if cur != landed:
            raise AssertionError(f"closed form gave {landed}, naive gave {cur}")
    return JumpReport(d, landed, k, check)


def fast_trajectory(y: int, max_rounds: int = DEFAULT_MAX_STEPS) -> FastTrajectory:
    """decompose -> jump -> one explicit T step, repeated until 1 appears."""
    require_odd(y, "y")
    if max_rounds < 1:
        raise ValueError("max_rounds must be positive")
    rounds = []
    cur = y
    for _ in range(max_rounds):
        d = decompose(cur)
        rep = jump(d)
        rec = t_step(rep.landed)
        top = cur
        if d.n >= 3:
            # skipped iterates rise, so the last skipped 3m+1 is the largest
            top = max(top, 3 * rising_iterate(d, d.n - 3) + 1)
        if rec.before != 1:
            top = max(top, 3 * rec.before + 1)
        rounds.append(FastRound(rep, rec.after, rec.valuation, top))
        cur = rec.after
        if cur == 1:
            return FastTrajectory(y, tuple(rounds), True)
    return FastTrajectory(y, tuple(rounds), False)
