"""Brute-force ground truth: exhaustive path generation, area totals, and
the reversal bijection between the two path families."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import VerificationFailure
from .strip import Direction

DEFAULT_BUDGET = 16


@dataclass(frozen=True)
class OracleReport:
    """Histogram of endpoints plus the cumulative area over closed paths."""

    direction: Direction
    length: int
    height: Optional[int]
    by_level: dict[int, int]
    closed_count: int
    total_area: int


def _steps(direction: Direction, level: int, cap: int) -> Iterator[int]:
    # generation order: up first, then shallowest down (keeps output stable)
    if direction is Direction.LR:
        if level + 1 <= cap:
            yield level + 1
        down = level - 1
        while down >= 0:
            yield down
            down -= 2
    else:
        up = level + 1
        while up <= cap:
            yield up
            up += 2
        if level - 1 >= 0:
            yield level - 1


def enumerate_paths(
    direction: Direction,
    n: int,
    height: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
) -> OracleReport:
    """Depth-first walk over every legal path of length n.

    Only counts and the closed-path area are accumulated; the paths
    themselves are not materialized.  Unbounded RL paths have infinitely
    many endpoints (arbitrarily large up-steps), so the walk runs on a
    ladder up to 2n and the histogram keeps only the complete levels <= n.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n > budget:
        raise ValueError(f"length {n} exceeds enumeration budget {budget}")
    if height is not None:
        cap = height
    else:
        cap = n if direction is Direction.LR else 2 * n
    by_level: Counter[int] = Counter()
    total_area = 0

    def walk(pos: int, level: int, area: int) -> None:
        nonlocal total_area
        if pos == n:
            by_level[level] += 1
            if level == 0:
                total_area += area
            return
        for nxt in _steps(direction, level, cap):
            walk(pos + 1, nxt, area + nxt)

    walk(0, 0, 0)
    if height is None:
        by_level = Counter({k: v for k, v in by_level.items() if k <= n})
    return OracleReport(direction, n, height, dict(by_level), by_level[0], total_area)


def generate_closed(
    direction: Direction, n: int, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """All closed paths of length n as ordinate tuples c_0..c_n."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n > budget:
        raise ValueError(f"length {n} exceeds enumeration budget {budget}")
    out: list[tuple[int, ...]] = []
    path = [0]

    def walk(pos: int, level: int) -> None:
        if pos == n:
            if level == 0:
                out.append(tuple(path))
            return
        for nxt in _steps(direction, level, n):
            path.append(nxt)
            walk(pos + 1, nxt)
            path.pop()

    walk(0, 0)
    return out


def reverse_check(n: int, budget: int = 14) -> dict[str, int]:
    """Verify that reversing every closed LR path gives exactly the closed
    RL paths, and that the area multiset survives the reversal."""
    if n % 2 != 0:
        raise ValueError("closed paths have even length")
    if n > budget:
        raise ValueError(f"length {n} exceeds enumeration budget {budget}")
    lr = generate_closed(Direction.LR, n, budget=budget)
    rl = generate_closed(Direction.RL, n, budget=budget)
    reversed_lr = {tuple(reversed(p)) for p in lr}
    if len(reversed_lr) != len(lr):
        raise VerificationFailure(f"reversal is not injective at n={n}")
    if reversed_lr != set(rl):
        raise VerificationFailure(f"reversed LR paths != RL paths at n={n}")
    lr_areas = Counter(sum(p) for p in lr)
    rl_areas = Counter(sum(p) for p in rl)
    if lr_areas != rl_areas:
        raise VerificationFailure(f"area multisets differ under reversal at n={n}")
    return {"length": n, "closed_paths": len(lr)}


def area_check(n_max: int, budget: int = DEFAULT_BUDGET) -> list[tuple[int, int]]:
    """Compare the oracle's total area against the closed binomial sum for
    every half-length n <= n_max; returns the agreed (n, area) pairs."""
    from .closed import area_coeff

    results = []
    for n in range(n_max + 1):
        oracle = enumerate_paths(Direction.LR, 2 * n, budget=budget).total_area
        formula = area_coeff(n)
        if oracle != formula:
            raise VerificationFailure(
                f"area mismatch at n={n}: oracle {oracle} vs formula {formula}"
            )
        results.append((n, formula))
    return results
