"""Closed forms for T(2n,d), the sums of multiple t-values at even arguments.

T(2n,d) is the sum of t(2j_1,...,2j_d) over all compositions j_1+...+j_d = n
into d positive parts.  Three independent exact routes are implemented:

* :func:`T_from_t_values` -- a short sum of binomial-weighted products
  pi**(2j) * t(2n-2j);
* :func:`T_from_bernoulli` -- the equivalent form whose coefficients carry
  Bernoulli numbers, the shape in which depth-by-depth coefficient rows
  (7/128, -3/64, 1/320 at depth 5, ...) are usually displayed;
* :func:`T_from_euler` -- an Euler-number sum, cheapest when n - d is small;

plus :func:`T_table_from_genfunc`, coefficient extraction from the bivariate
generating function of :mod:`tsums.series`.  All four agree exactly, and the
verification suites exercise precisely that.

Conventions: T(2n,d) = 0 for d > n (empty sum over compositions), and every
nonzero value has pi-exponent exactly 2n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import PiPower, bernoulli, binomial, euler_number, t_even
from .series import genfunc_biseries

__all__ = [
    "TTable",
    "CoeffRow",
    "DepthSumResult",
    "BernoulliEulerResult",
    "t_all_twos",
    "T_from_t_values",
    "T_from_bernoulli",
    "T_from_euler",
    "T_table_from_genfunc",
    "coeff_row",
    "depth_sum_identity",
    "bernoulli_euler_lhs",
    "bernoulli_euler_check",
]


def _check_args(n: int, d: int) -> None:
    if n < 1 or d < 1:
        raise ValueError(f"require n >= 1 and d >= 1, got n={n}, d={d}")


def t_all_twos(n: int) -> PiPower:
    """t(2,2,...,2) with n twos: pi**(2n) / (4**n (2n)!)."""
    if n < 1:
        raise ValueError(f"t_all_twos requires n >= 1, got {n}")
    return PiPower(Fraction(1, 4**n * math.factorial(2 * n)), 2 * n)


def T_from_t_values(n: int, d: int) -> PiPower:
    """T(2n,d) as sum_j (-1)**j pi**(2j) binom(2d-2j-2, d-1) t(2n-2j)
    / (2**(2d-2) (2j)! d), summed over 0 <= j <= (d-1)//2.

    The pi**(2j) factor merges with t(2n-2j)'s pi**(2n-2j), so the result
    is assembled exactly with pi-exponent 2n.
    """
    _check_args(n, d)
    if d > n:
        return PiPower.zero()
    total = PiPower.zero()
    scale = Fraction(1, 2 ** (2 * d - 2) * d)
    for j in range((d - 1) // 2 + 1):
        c = scale * Fraction((-1) ** j * binomial(2 * d - 2 * j - 2, d - 1),
                             math.factorial(2 * j))
        term = c * t_even(n - j) * PiPower(Fraction(1), 2 * j)
        total = total + term
    return total


def T_from_bernoulli(n: int, d: int) -> PiPower:
    """T(2n,d) in the Bernoulli-number form

    binom(2d-2,d-1) t(2n) / (2**(2d-2) d)
      - sum_{j=1}^{(d-1)//2} binom(2d-2j-2,d-1) t(2j) t(2n-2j)
                             / (2**(2d-3) (2**(2j)-1) B_{2j} d).
    """
    _check_args(n, d)
    if d > n:
        return PiPower.zero()
    row = coeff_row(d)
    total = PiPower.zero()
    for j, c in row.pairs:
        if j == 0:
            total = total + c * t_even(n)
        else:
            total = total + c * (t_even(j) * t_even(n - j))
    return total


def T_from_euler(n: int, d: int) -> PiPower:
    """T(2n,d) as (-1)**(n-d) pi**(2n) / (4**n (2n)!) times the integer
    sum_{l=0}^{n-d} binom(n-l,d) binom(2n,2l) E_{2l}."""
    _check_args(n, d)
    if d > n:
        return PiPower.zero()
    acc = 0
    for ell in range(n - d + 1):
        acc += binomial(n - ell, d) * binomial(2 * n, 2 * ell) * euler_number(2 * ell)
    coeff = Fraction((-1) ** (n - d) * acc, 4**n * math.factorial(2 * n))
    return PiPower(coeff, 2 * n)


@dataclass(frozen=True)
class TTable:
    """Exact table of T(2n,d) for 1 <= d <= n <= max_n.

    Entries for d > n are absent: those values are exactly zero.
    """

    max_n: int
    entries: dict[tuple[int, int], PiPower]

    def value(self, n: int, d: int) -> PiPower:
        _check_args(n, d)
        if n > self.max_n:
            raise KeyError(f"table holds n <= {self.max_n}, got n={n}")
        return self.entries.get((n, d), PiPower.zero())


def T_table_from_genfunc(max_n: int) -> TTable:
    """All T(2n,d) for n <= max_n by coefficient extraction from the
    generating function c((1-v)y)/c(y), rescaled by pi**(2n) / 4**n."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    phi = genfunc_biseries(max_n)
    entries: dict[tuple[int, int], PiPower] = {}
    for n in range(1, max_n + 1):
        for d in range(1, n + 1):
            c = phi.coeff(n, d)
            if c:
                entries[(n, d)] = PiPower(c / 4**n, 2 * n)
    return TTable(max_n, entries)


@dataclass(frozen=True)
class CoeffRow:
    """Symbolic coefficients of a fixed-depth row, independent of n:

    T(2n,d) = pairs[0] * t(2n) + sum_{j>=1} pairs[j] * t(2j) t(2n-2j),
    with j running over 0..(d-1)//2.
    """

    depth: int
    pairs: tuple[tuple[int, Fraction], ...]


def coeff_row(d: int) -> CoeffRow:
    """Coefficient row of depth d in the Bernoulli-number form."""
    if d < 1:
        raise ValueError(f"depth must be >= 1, got {d}")
    pairs = [(0, Fraction(binomial(2 * d - 2, d - 1), 2 ** (2 * d - 2) * d))]
    for j in range(1, (d - 1) // 2 + 1):
        denom = Fraction(2 ** (2 * d - 3) * (2 ** (2 * j) - 1) * d) * bernoulli(2 * j)
        pairs.append((j, -binomial(2 * d - 2 * j - 2, d - 1) / denom))
    return CoeffRow(d, tuple(pairs))


@dataclass(frozen=True)
class DepthSumResult:
    lhs: PiPower
    rhs: PiPower
    equal: bool


def depth_sum_identity(n: int) -> DepthSumResult:
    """Check sum_{d=1}^{n} T(2n,d) = (-1)**n E_{2n} pi**(2n) / (4**n (2n)!)."""
    if n < 1:
        raise ValueError(f"require n >= 1, got {n}")
    lhs = PiPower.zero()
    for d in range(1, n + 1):
        lhs = lhs + T_from_euler(n, d)
    rhs = PiPower(
        Fraction((-1) ** n * euler_number(2 * n), 4**n * math.factorial(2 * n)),
        2 * n,
    )
    return DepthSumResult(lhs, rhs, lhs == rhs)


def bernoulli_euler_lhs(n: int, d: int) -> Fraction:
    """The Bernoulli-side sum

    sum_{j=0}^{(d-1)//2} (2**(2n-2j)-1) B_{2n-2j} binom(2d-2j-2, d-1)
                         binom(2n, 2j) / (2**(2d-1) d).

    Terms with 2j > 2n vanish through binom(2n,2j) = 0 (and are skipped
    before touching a negative Bernoulli index); the j = n term vanishes
    through the factor 2**0 - 1 = 0.
    """
    _check_args(n, d)
    acc = Fraction(0)
    for j in range((d - 1) // 2 + 1):
        b2 = binomial(2 * n, 2 * j)
        if b2 == 0:
            continue
        m = 2 * n - 2 * j
        acc += (2**m - 1) * bernoulli(m) * binomial(2 * d - 2 * j - 2, d - 1) * b2
    return acc / (2 ** (2 * d - 1) * d)


@dataclass(frozen=True)
class BernoulliEulerResult:
    n: int
    d: int
    case: str  # "d<=n", "n<d<2n", or "d>=2n"
    lhs: Fraction
    rhs: Fraction
    passed: bool


def bernoulli_euler_check(n: int, d: int) -> BernoulliEulerResult:
    """Evaluate the Bernoulli-side sum against its case-by-case value.

    * d <= n: the sum times (-1)**(n+1) pi**(2n) / (2n)! equals T(2n,d), so
      the rational target is (-1)**(n+1) (2n)! * coeff(T_from_euler(n,d));
    * n < d < 2n: the sum is 0;
    * d >= 2n: the sum is n binom(2d-2n-1, d-1) / (2**(2d-1) d).
    """
    _check_args(n, d)
    lhs = bernoulli_euler_lhs(n, d)
    if d <= n:
        case = "d<=n"
        rhs = (-1) ** (n + 1) * math.factorial(2 * n) * T_from_euler(n, d).coeff
    elif d < 2 * n:
        case = "n<d<2n"
        rhs = Fraction(0)
    else:
        case = "d>=2n"
        rhs = Fraction(n * binomial(2 * d - 2 * n - 1, d - 1), 2 ** (2 * d - 1) * d)
    return BernoulliEulerResult(n, d, case, lhs, rhs, lhs == rhs)
