"""Cross-validation suites tying every computation route together.

Each suite returns a list of check results; the CLI renders them and turns
any failure into a nonzero exit.  The suites deliberately pit independent
routes against each other: dynamic programming vs closed forms, Cramer
quotients vs direct elimination, formula vs brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import closed, oracle, published, roots
from .errors import VerificationFailure
from .series import coeff_x, t_series, zseries_of
from .strip import (
    Direction,
    bounded_f,
    bounded_g,
    delta,
    det_d,
    det_direct,
    dp_counts,
    seq_a,
    solve_system,
    stabilized,
)

SUITES = ("dp-closed", "cramer", "area", "roots", "reversal", "paper-lists")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))


def suite_dp_closed(nmax: int = 20) -> SuiteReport:
    """Closed-form counts against unbounded dynamic programming."""
    rep = SuiteReport("dp-closed")
    lr = dp_counts(Direction.LR, nmax)
    bad = [
        (n, k)
        for n in range(nmax + 1)
        for k in range(n + 1)
        if closed.count_lr_closed(n, k) != lr.count(n, k)
    ]
    rep.add(f"LR closed form == DP (n<={nmax})", not bad, f"first mismatch {bad[:1]}")
    rl_nmax = min(nmax, 30)
    rl = dp_counts(Direction.RL, rl_nmax)
    bad = [
        (n, i)
        for n in range(rl_nmax + 1)
        for i in range(min(n, 12) + 1)
        if closed.count_rl_closed(n, i) != rl.count(n, i)
    ]
    rep.add(f"RL closed form == DP (n<={rl_nmax}, i<=12)", not bad, f"first mismatch {bad[:1]}")
    bad = [n for n in range(41) if closed.count_lr_closed(2 * n, 0) != closed.cat3(n)]
    rep.add("generalized Catalan identity (N<=40)", not bad, f"first mismatch {bad[:1]}")
    bad = [
        (n, k)
        for n in range(nmax + 1)
        for k in range(n + 1)
        if (n - k) % 2 == 1
        and (closed.count_lr_closed(n, k) or closed.count_rl_closed(n, k))
    ]
    rep.add("parity vanishing", not bad, f"first mismatch {bad[:1]}")
    return rep


def suite_cramer(h_max: int = 10, order: int = 20, m_max: int = 12) -> SuiteReport:
    """DP = Cramer quotient = banded solve, plus the determinant oracles."""
    rep = SuiteReport("cramer")
    ok = True
    detail = ""
    for direction in Direction:
        quot = bounded_f if direction is Direction.LR else bounded_g
        for h in range(h_max + 1):
            table = dp_counts(direction, order, height=h)
            sol = solve_system(direction, h, order)
            for level in range(h + 1):
                cram = quot(level, h, order)
                dp_col = tuple(table.count(n, level) for n in range(order + 1))
                if cram.coeffs != dp_col or cram != sol[level]:
                    ok = False
                    detail = f"{direction.value} h={h} level={level}"
                    break
    rep.add(f"three-way equality (h<={h_max}, order {order})", ok, detail)

    ok = all(det_d(m, order) == det_direct(m, order) for m in range(m_max + 1))
    rep.add(f"d_m == direct determinant (m<={m_max})", ok)
    ok = all(
        delta(m, q, order) == det_direct(m, order, q=q)
        for m in range(1, m_max + 1)
        for q in range(1, m + 1)
    )
    rep.add(f"Delta_(m,q) == direct determinant (m<={m_max})", ok)
    ok = all(det_d(m, order) == seq_a(m + 1, order) for m in range(31))
    rep.add("d_m == a_(m+1) (m<=30)", ok)

    ok = True
    for level in (0, 1, 2):
        small = 8
        ref = stabilized(Direction.LR, level, small)
        for h in range(level, small + level + 3):
            bounded = bounded_f(level, h, small)
            if any(b > r for b, r in zip(bounded.coeffs, ref.coeffs)):
                ok = False
    rep.add("bounded coefficients grow monotonically to the limit", ok)
    return rep


def suite_area(oracle_nmax: int = 3, nmax: int = 30, budget: int = oracle.DEFAULT_BUDGET) -> SuiteReport:
    """Area identity along all three routes plus the brute-force oracle."""
    rep = SuiteReport("area")
    gf = closed.area_gf()
    conv = closed.area_convolution(2 * nmax)
    bad = [
        n
        for n in range(nmax + 1)
        if not closed.area_coeff(n) == coeff_x(gf, n) == conv[2 * n]
    ]
    rep.add(f"closed sum == GF extraction == convolution (n<={nmax})", not bad, f"{bad[:1]}")
    try:
        pairs = oracle.area_check(oracle_nmax, budget=budget)
        rep.add(
            f"oracle total area (n<={oracle_nmax})",
            True,
            " ".join(str(v) for _, v in pairs),
        )
    except VerificationFailure as exc:
        rep.add(f"oracle total area (n<={oracle_nmax})", False, str(exc))
    return rep


def suite_roots(n_max: int = 30) -> SuiteReport:
    """Numeric certification of every radical closed form."""
    rep = SuiteReport("roots")
    grid = [round(0.05 * k, 2) for k in range(1, 7)]  # 0.05 .. 0.30
    for t in grid:
        rs = roots.root_set(t)
        fact = roots.verify_factorizations(rs, tol=1e-10)
        rep.add(f"factorization identities at t={t}", fact.passed, "; ".join(fact.failures))
        seq = roots.verify_an_bn(rs, n_max, tol=1e-9)
        rep.add(f"a_n/b_n closed forms at t={t} (n<={n_max})", seq.passed, "; ".join(seq.failures))
    ok = all(
        abs(roots.t_of_z(roots.root_set(t).z) - t) < 1e-12 for t in grid
    )
    rep.add("t_of_z inverts t -> sqrt(t)(1-t)", ok)
    for i, z in ((0, 0.1), (1, 0.1), (2, 0.2)):
        g = roots.verify_g_numeric(i, 24, z)
        rep.add(f"numeric mu-form of g_{i} at z={z}", g.passed, "; ".join(g.failures))
    return rep


def suite_reversal(n_max: int = 14, budget: int = 14) -> SuiteReport:
    """Reversal bijection between the two closed-path families."""
    rep = SuiteReport("reversal")
    for n in range(0, n_max + 1, 2):
        try:
            info = oracle.reverse_check(n, budget=max(budget, n_max))
            rep.add(f"reversal bijection at n={n}", True, f"{info['closed_paths']} paths")
        except VerificationFailure as exc:
            rep.add(f"reversal bijection at n={n}", False, str(exc))
    return rep


def suite_paper_lists() -> SuiteReport:
    """Published series tables vs computed values; the documented errata are
    reported, and the diff must equal the documented set exactly."""
    rep = SuiteReport("paper-lists")
    devs = published.printed_deviations()
    for d in sorted(devs):
        rep.notes.append(
            f"{d.family}_{d.level}[z^{d.order}]: printed {d.printed}, computed {d.computed}"
        )
    extra = devs - published.DOCUMENTED_DEVIATIONS
    missing = published.DOCUMENTED_DEVIATIONS - devs
    rep.add(
        "deviations match the documented errata exactly",
        not extra and not missing,
        f"extra={sorted(extra)[:2]} missing={sorted(missing)[:2]}",
    )
    rep.add("f lists exact up to z^8", all(d.order > 8 for d in devs))
    return rep


def suite_identities() -> SuiteReport:
    """A few global identities that belong to no single suite."""
    rep = SuiteReport("identities")
    f0 = zseries_of(closed.f_closed(0), 60)
    g0 = stabilized(Direction.RL, 0, 60)
    rep.add("f_0 == g_0 to order 60", f0 == g0)
    t = t_series(40)
    zf1 = zseries_of(closed.f_closed(1), 81).shift(1)
    ok = all(t[n] == zf1[2 * n] for n in range(41)) and all(
        c == 0 for p, c in enumerate(zf1.coeffs) if p % 2 == 1
    )
    rep.add("t(x) == z*f_1(z) under x=z^2 to order 40", ok)
    return rep


def run_suites(
    names: list[str],
    *,
    nmax: int | None = None,
    budget: int = oracle.DEFAULT_BUDGET,
) -> list[SuiteReport]:
    reports = []
    for name in names:
        if name == "dp-closed":
            reports.append(suite_dp_closed(nmax if nmax is not None else 20))
        elif name == "cramer":
            reports.append(suite_cramer())
        elif name == "area":
            reports.append(
                suite_area(nmax if nmax is not None else 3, budget=budget)
            )
        elif name == "roots":
            reports.append(suite_roots())
        elif name == "reversal":
            reports.append(
                suite_reversal(nmax if nmax is not None else 14, budget=budget)
            )
        elif name == "paper-lists":
            reports.append(suite_paper_lists())
        elif name == "identities":
            reports.append(suite_identities())
        else:
            raise ValueError(f"unknown suite {name!r}")
    return reports


def all_suite_names() -> list[str]:
    return list(SUITES) + ["identities"]
