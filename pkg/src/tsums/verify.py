"""Verification suites: every identity the library implements, as checkable
case batteries with a JSON-serializable report.

Each suite returns a :class:`Report`; the CLI serializes it to stdout and
derives its exit status solely from the failure count.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

from . import exact, formulas, oracle, series, symfunc

__all__ = ["Case", "Report", "SUITES", "SUITE_DEFAULTS", "run_suite"]


@dataclass(frozen=True)
class Case:
    id: str
    params: dict
    expected: str
    actual: str
    passed: bool


@dataclass
class Report:
    suite: str
    cases: list[Case] = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    def add(self, id: str, params: dict, expected, actual, passed: bool) -> None:
        self.cases.append(Case(id, params, str(expected), str(actual), passed))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": [
                {
                    "id": c.id,
                    "params": c.params,
                    "expected": c.expected,
                    "actual": c.actual,
                    "pass": c.passed,
                }
                for c in self.cases
            ],
            "summary": {
                "total": self.total,
                "passed": self.passed,
                "failed": self.failed,
            },
            "wall_time_s": round(self.wall_time_s, 3),
        }


def suite_closed_forms(max_n: int = 30) -> Report:
    """All four exact routes agree on every cell 1 <= d <= n <= max_n."""
    rep = Report("closed-forms")
    t0 = time.perf_counter()
    table = formulas.T_table_from_genfunc(max_n)
    for n in range(1, max_n + 1):
        for d in range(1, n + 1):
            ref = formulas.T_from_euler(n, d)
            others = (
                formulas.T_from_t_values(n, d),
                formulas.T_from_bernoulli(n, d),
                table.value(n, d),
            )
            ok = all(x == ref for x in others)
            rep.add(
                f"T({2*n},{d})",
                {"n": n, "d": d},
                ref,
                ref if ok else " / ".join(str(x) for x in (ref,) + others),
                ok,
            )
    rep.wall_time_s = time.perf_counter() - t0
    return rep


def suite_genfunc(max_n: int = 30) -> Report:
    """Generating-function facts: extracted table vs the Euler-number form,
    the boundary rows T(2n,1) = t(2n) and T(2n,n) = t({2}**n), the secant
    coefficients (-1)**j E_{2j}/(2j)!, and the tangent-series slots."""
    rep = Report("genfunc")
    t0 = time.perf_counter()
    table = formulas.T_table_from_genfunc(max_n)
    for n in range(1, max_n + 1):
        for d in range(1, n + 1):
            got = table.value(n, d)
            want = formulas.T_from_euler(n, d)
            rep.add(f"coeff T({2*n},{d})", {"n": n, "d": d}, want, got, got == want)
    for n in range(1, max_n + 1):
        got = table.value(n, 1)
        want = exact.t_even(n)
        rep.add(f"depth-1 row n={n}", {"n": n}, want, got, got == want)
        got = table.value(n, n)
        want = formulas.t_all_twos(n)
        rep.add(f"all-twos cell n={n}", {"n": n}, want, got, got == want)
    sec = series.cos_sqrt_series(max_n).recip()
    for j in range(max_n + 1):
        want = Fraction((-1) ** j * exact.euler_number(2 * j), math.factorial(2 * j))
        got = sec[j]
        rep.add(f"secant coeff j={j}", {"j": j}, want, got, got == want)
    tan = series.tan_link_series(min(max_n, 20))
    for m in range(1, min(max_n, 20) + 1):
        want = series.tan_link_expected(m)
        got = tan[m]
        rep.add(f"tangent slot m={m}", {"m": m}, want, got, got == want)
    rep.wall_time_s = time.perf_counter() - t0
    return rep


def suite_depth_sum(max_n: int = 30) -> Report:
    """sum_d T(2n,d) = (-1)**n E_{2n} pi**(2n)/(4**n (2n)!) for n <= max_n."""
    rep = Report("depth-sum")
    t0 = time.perf_counter()
    for n in range(1, max_n + 1):
        r = formulas.depth_sum_identity(n)
        rep.add(f"n={n}", {"n": n}, r.rhs, r.lhs, r.equal)
    rep.wall_time_s = time.perf_counter() - t0
    return rep


def suite_bernoulli_euler(max_n: int = 15, max_d: int = 40) -> Report:
    """The Bernoulli-vs-Euler sum identity over the (n,d) grid, all three
    case branches."""
    rep = Report("bernoulli-euler")
    t0 = time.perf_counter()
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            r = formulas.bernoulli_euler_check(n, d)
            rep.add(
                f"n={n},d={d} [{r.case}]",
                {"n": n, "d": d, "case": r.case},
                r.rhs,
                r.lhs,
                r.passed,
            )
    rep.wall_time_s = time.perf_counter() - t0
    return rep


def suite_symmetric(max_n: int = 8, num_vars: int | None = None) -> Report:
    """Symmetric-function identities in m variables plus numeric spot checks
    of the x_j -> 1/(2j-1)**2 specialization."""
    m = num_vars if num_vars is not None else max(max_n, 2)
    rep = Report("symmetric")
    t0 = time.perf_counter()
    ok = symfunc.check_bivariate_factorization(max_n, m)
    rep.add(
        f"factorization deg<={max_n}",
        {"n_max": max_n, "m": m},
        "equal",
        "equal" if ok else "mismatch",
        ok,
    )
    for n in range(1, max_n + 1):
        for d in range(1, n + 1):
            ok = symfunc.check_monomial_expansion(n, d, m)
            rep.add(
                f"expansion n={n},d={d}",
                {"n": n, "d": d, "m": m},
                "equal",
                "equal" if ok else "mismatch",
                ok,
            )
    spot_vars, spot_dps = 20_000, 30
    for n in range(1, min(max_n, 4) + 1):
        got = symfunc.specialize_odd_squares(
            symfunc.GenExpr.elem(n), spot_vars, spot_dps
        )
        want = oracle.pi_power_eval(formulas.t_all_twos(n), spot_dps)
        ok = abs(got.value - want.value) <= got.err + want.err
        rep.add(
            f"specialize e_{n}",
            {"n": n, "num_vars": spot_vars},
            mp.nstr(want.value, 15),
            mp.nstr(got.value, 15),
            ok,
        )
        got = symfunc.specialize_odd_squares(
            symfunc.GenExpr.homog(n), spot_vars, spot_dps
        )
        want = oracle.pi_power_eval(formulas.depth_sum_identity(n).rhs, spot_dps)
        ok = abs(got.value - want.value) <= got.err + want.err
        rep.add(
            f"specialize h_{n}",
            {"n": n, "num_vars": spot_vars},
            mp.nstr(want.value, 15),
            mp.nstr(got.value, 15),
            ok,
        )
    for n, d in ((2, 1), (2, 2), (3, 2), (3, 3)):
        if n > max_n:
            continue
        got = symfunc.specialize_odd_squares(
            symfunc.monomial_depth_expr(n, d), spot_vars, spot_dps
        )
        want = oracle.pi_power_eval(formulas.T_from_euler(n, d), spot_dps)
        ok = abs(got.value - want.value) <= got.err + want.err
        rep.add(
            f"specialize N({n},{d})",
            {"n": n, "d": d, "num_vars": spot_vars},
            mp.nstr(want.value, 15),
            mp.nstr(got.value, 15),
            ok,
        )
    rep.wall_time_s = time.perf_counter() - t0
    return rep


def suite_oracle(max_n: int = 5, terms: int = 1_000_000, dps: int = 50) -> Report:
    """Series-oracle agreement: |T_numeric - eval(closed form)| within the
    reported bound and relative bound <= 1e-6, for 1 <= d <= n <= max_n."""
    rep = Report("oracle")
    t0 = time.perf_counter()
    params = oracle.TruncationParams(terms=terms, tail_order=1)
    for n in range(1, max_n + 1):
        for d in range(1, n + 1):
            num = oracle.T_numeric(n, d, params, dps)
            ref = oracle.pi_power_eval(formulas.T_from_euler(n, d), dps)
            gap = num - ref
            rel = num.err / abs(ref.value)
            ok = abs(gap.value) <= gap.err and rel <= mp.mpf("1e-6")
            rep.add(
                f"T({2*n},{d}) numeric",
                {"n": n, "d": d, "terms": terms},
                mp.nstr(ref.value, 20),
                f"{mp.nstr(num.value, 20)} err<={mp.nstr(num.err, 3)}",
                ok,
            )
    rep.wall_time_s = time.perf_counter() - t0
    return rep


SUITES = {
    "closed-forms": suite_closed_forms,
    "genfunc": suite_genfunc,
    "depth-sum": suite_depth_sum,
    "bernoulli-euler": suite_bernoulli_euler,
    "symmetric": suite_symmetric,
    "oracle": suite_oracle,
}

SUITE_DEFAULTS = {
    "closed-forms": {"max_n": 30},
    "genfunc": {"max_n": 30},
    "depth-sum": {"max_n": 30},
    "bernoulli-euler": {"max_n": 15, "max_d": 40},
    "symmetric": {"max_n": 8},
    "oracle": {"max_n": 5, "terms": 1_000_000, "dps": 50},
}


def run_suite(name: str, **overrides) -> Report:
    """Run one named suite (or 'all'), applying keyword overrides on top of
    the per-suite defaults.  Unknown override keys are ignored per suite."""
    if name == "all":
        t0 = time.perf_counter()
        combined = Report("all")
        for sub in SUITES:
            rep = run_suite(sub, **overrides)
            for c in rep.cases:
                combined.cases.append(
                    Case(f"{sub}/{c.id}", c.params, c.expected, c.actual, c.passed)
                )
        combined.wall_time_s = time.perf_counter() - t0
        return combined
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    kwargs = dict(SUITE_DEFAULTS[name])
    fn = SUITES[name]
    for key, value in overrides.items():
        if value is not None and key in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
            kwargs[key] = value
    return fn(**kwargs)
