"""Strip-bounded enumeration and the linear-algebra route.

Paths live in the strip 0 <= level <= h.  Left-to-right (LR) paths step
+1 or -1,-3,-5,...; right-to-left (RL) paths are the reversal: +1,+3,+5,...
and -1.  Generating functions for fixed h come from Cramer's rule over the
banded system matrix, and the unbounded limit is obtained by pushing the
barrier high enough that the truncated series stabilizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import ConsistencyError
from .series import IntPoly, ZSeries


class Direction(Enum):
    LR = "lr"
    RL = "rl"


@dataclass(frozen=True)
class CountTable:
    """Triangle of path counts by (length, end level)."""

    direction: Direction
    height: Optional[int]  # None = unbounded
    rows: tuple[tuple[int, ...], ...]

    def count(self, n: int, k: int) -> int:
        if not 0 <= n < len(self.rows):
            raise IndexError(f"row {n} out of range")
        row = self.rows[n]
        return row[k] if 0 <= k < len(row) else 0


def dp_counts(direction: Direction, n_max: int, height: Optional[int] = None) -> CountTable:
    """Exact counts of paths from (0,0) to (n,k) staying within [0, h].

    Unbounded LR paths never exceed level n_max, but unbounded RL paths may
    overshoot the reported levels and come back with -1 steps, so the RL
    recursion runs on a ladder up to 2*n_max (a path ending at k <= n never
    exceeds k + n).  LR row n keeps levels 0..min(n, h); RL rows keep every
    level up to min(h, n_max), since a single up-step reaches any odd level.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if direction is Direction.LR:
        ladder = n_max if height is None else min(height, n_max)
        report = n_max if height is None else min(height, n_max)
    else:
        # one up-step reaches any level <= h, so a bounded RL strip needs the
        # full ladder; the unbounded table is complete for levels <= n_max
        ladder = 2 * n_max if height is None else height
        report = n_max if height is None else height
    prev = [0] * (ladder + 1)
    prev[0] = 1
    rows = [(1,)]
    for n in range(1, n_max + 1):
        cur = [0] * (ladder + 1)
        for k in range(ladder + 1):
            if direction is Direction.LR:
                acc = prev[k - 1] if k >= 1 else 0
                j = k + 1
                while j <= ladder:
                    acc += prev[j]
                    j += 2
            else:
                acc = prev[k + 1] if k + 1 <= ladder else 0
                j = k - 1
                while j >= 0:
                    acc += prev[j]
                    j -= 2
            cur[k] = acc
        prev = cur
        reach = n if direction is Direction.LR else report
        rows.append(tuple(cur[: min(reach, report) + 1]))
    return CountTable(direction, height, tuple(rows))


# ---------------------------------------------------------------------------
# the two auxiliary coefficient sequences
# ---------------------------------------------------------------------------

def seq_a(n: int, order: int) -> ZSeries:
    """Coefficient of X^n in 1/(1 - X + z^2 X^3); zero series for n < 0."""
    if n < 0:
        return ZSeries.zero(order)
    vals = [ZSeries.one(order)] * 3  # a0 = a1 = a2 = 1
    if n < 3:
        return vals[n]
    for _ in range(3, n + 1):
        nxt = vals[2] - vals[0].shift(2)
        vals = [vals[1], vals[2], nxt]
    return vals[2]


def seq_b(n: int, order: int) -> ZSeries:
    """Coefficient of Y^n in 1/(1 - Y^2 - z Y^3); zero series for n < 0."""
    if n < 0:
        return ZSeries.zero(order)
    vals = [ZSeries.one(order), ZSeries.zero(order), ZSeries.one(order)]
    if n < 3:
        return vals[n]
    for _ in range(3, n + 1):
        nxt = vals[1] + vals[0].shift(1)
        vals = [vals[1], vals[2], nxt]
    return vals[2]


def det_d(m: int, order: int) -> ZSeries:
    """Determinant of the m x m system matrix: d_m = d_{m-1} - z^2 d_{m-3}."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    vals = [ZSeries.one(order), ZSeries.one(order),
            ZSeries.one(order) - ZSeries.monomial(2, order)]
    if m < 3:
        return vals[m]
    for _ in range(3, m + 1):
        nxt = vals[2] - vals[0].shift(2)
        vals = [vals[1], vals[2], nxt]
    return vals[2]


def delta(m: int, q: int, order: int) -> ZSeries:
    """Cramer numerator for the RL system: column q replaced by e_1.

    The q = m case is z*(b_{m-2} + z b_{m-3}); the product form for
    2 <= q < m is z a_{m-q}(b_{q-2} + z b_{q-3}) + z^2 a_{m-q-1}(b_{q-3} + z b_{q-4}).
    """
    if not 1 <= q <= m:
        raise ValueError(f"need 1 <= q <= m, got q={q}, m={m}")
    if q == 1:
        return det_d(m - 1, order)
    if q == m:
        return (seq_b(m - 2, order) + seq_b(m - 3, order).shift(1)).shift(1)
    t1 = seq_a(m - q, order) * (seq_b(q - 2, order) + seq_b(q - 3, order).shift(1))
    t2 = seq_a(m - q - 1, order) * (seq_b(q - 3, order) + seq_b(q - 4, order).shift(1))
    return t1.shift(1) + t2.shift(2)


# ---------------------------------------------------------------------------
# direct determinants over Z[z] (independent oracle)
# ---------------------------------------------------------------------------

def _lr_matrix_poly(m: int) -> list[list[IntPoly]]:
    """LR system matrix over Z[z]: 1 on the diagonal, -z on the subdiagonal
    and at every odd offset above the diagonal."""
    one = IntPoly((1,))
    mz = IntPoly((0, -1))
    zero = IntPoly()
    mat = []
    for i in range(m):
        row = []
        for j in range(m):
            if i == j:
                row.append(one)
            elif j == i - 1 or (j > i and (j - i) % 2 == 1):
                row.append(mz)
            else:
                row.append(zero)
        mat.append(row)
    return mat


def det_direct(m: int, order: int, q: Optional[int] = None) -> ZSeries:
    """Determinant by fraction-free (Bareiss) elimination over Z[z].

    With q=None this is the LR matrix (checks det_d); with 1 <= q <= m it is
    the transposed (RL) matrix with column q replaced by e_1 (checks delta).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return ZSeries.one(order)
    mat = _lr_matrix_poly(m)
    if q is not None:
        if not 1 <= q <= m:
            raise ValueError(f"need 1 <= q <= m, got q={q}")
        mat = [list(row) for row in zip(*mat)]  # transpose -> RL matrix
        for i in range(m):
            mat[i][q - 1] = IntPoly((1,)) if i == 0 else IntPoly()
    sign = 1
    prev = IntPoly((1,))
    for r in range(m - 1):
        if mat[r][r].is_zero():
            swap = next((i for i in range(r + 1, m) if not mat[i][r].is_zero()), None)
            if swap is None:
                return ZSeries.zero(order)
            mat[r], mat[swap] = mat[swap], mat[r]
            sign = -sign
        for i in range(r + 1, m):
            for j in range(r + 1, m):
                num = mat[i][j] * mat[r][r] - mat[i][r] * mat[r][j]
                quot, rem = num.divmod_by(prev)
                if not rem.is_zero():
                    raise ConsistencyError("Bareiss division was not exact")
                mat[i][j] = quot
            mat[i][r] = IntPoly()
        prev = mat[r][r]
    det = mat[m - 1][m - 1].scale(sign)
    return ZSeries(tuple(det[k] for k in range(order + 1)))


# ---------------------------------------------------------------------------
# bounded generating functions and the stabilized limit
# ---------------------------------------------------------------------------

def bounded_f(k: int, h: int, order: int) -> ZSeries:
    """LR paths in [0,h] ending at level k: f_k = z^k d_{h-k} / d_{h+1}."""
    if not 0 <= k <= h:
        raise ValueError(f"level {k} exceeds barrier {h}")
    return (det_d(h - k, order) * det_d(h + 1, order).inverse()).shift(k)


def bounded_g(i: int, h: int, order: int) -> ZSeries:
    """RL paths in [0,h] ending at level i: g_i = Delta_{h+1,i+1} / d_{h+1}."""
    if not 0 <= i <= h:
        raise ValueError(f"level {i} exceeds barrier {h}")
    return delta(h + 1, i + 1, order) * det_d(h + 1, order).inverse()


def stabilized(direction: Direction, level: int, order: int) -> ZSeries:
    """The h -> infinity limit, realized at a finite certifying barrier.

    Uses h = order + level + 2 and re-checks at h + 1; the two must agree
    bit for bit.
    """
    if level < 0 or order < 0:
        raise ValueError("level and order must be nonnegative")
    h = order + level + 2
    fn = bounded_f if direction is Direction.LR else bounded_g
    first = fn(level, h, order)
    second = fn(level, h + 1, order)
    if first != second:
        raise ConsistencyError(
            f"series at barrier {h} and {h + 1} differ; stabilization bound is wrong"
        )
    return first


def solve_system(direction: Direction, h: int, order: int) -> list[ZSeries]:
    """Solve the (h+1)x(h+1) banded system directly over truncated series.

    Returns the full vector (f_0..f_h) or (g_0..g_h); every pivot has
    constant term 1, so elimination never leaves the integers.
    """
    if h < 0:
        raise ValueError("h must be nonnegative")
    m = h + 1
    polys = _lr_matrix_poly(m)
    if direction is Direction.RL:
        polys = [list(row) for row in zip(*polys)]
    mat = [[ZSeries(tuple(p[k] for k in range(order + 1))) for p in row] for row in polys]
    rhs = [ZSeries.one(order)] + [ZSeries.zero(order)] * (m - 1)

    for r in range(m):
        if mat[r][r].coeffs[0] not in (1, -1):
            raise ConsistencyError("elimination pivot lost its unit constant term")
        pinv = mat[r][r].inverse()
        mat[r] = [e * pinv for e in mat[r]]
        rhs[r] = rhs[r] * pinv
        for i in range(r + 1, m):
            factor = mat[i][r]
            if factor.is_zero():
                continue
            mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
            rhs[i] = rhs[i] - factor * rhs[r]
    sol = [ZSeries.zero(order)] * m
    for i in range(m - 1, -1, -1):
        acc = rhs[i]
        for j in range(i + 1, m):
            if not mat[i][j].is_zero():
                acc = acc - mat[i][j] * sol[j]
        sol[i] = acc
    return sol
