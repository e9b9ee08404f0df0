"""Truncated formal power series over exact rationals.

One- and two-variable dense series with ring arithmetic that truncates
consistently at the stored order.  The central convention of the whole
library lives here: the substitution ``y = pi**2 * u / 4`` turns the
transcendental generating functions

    cos(pi*sqrt(u)/2),  sec(pi*sqrt(u)/2),  cos(pi*sqrt((1-v)*u)/2)

into series with rational coefficients.  Writing c(y) = sum (-1)**n y**n
/ (2n)! we have cos(pi*sqrt(u)/2) = c(pi**2 u / 4), and the bivariate
quotient c((1-v)*y)/c(y) is the generating function whose y**n v**d
coefficient equals T(2n,d) * 4**n / pi**(2n) -- an exact rational.
Conversion back to pi-power values happens in :mod:`tsums.formulas`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact import t_even

__all__ = [
    "USeries",
    "BiSeries",
    "cos_sqrt_series",
    "sin_sqrt_series",
    "genfunc_biseries",
    "tan_link_series",
    "tan_link_expected",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"series coefficients must be exact rationals, got {type(x)!r}")


@dataclass(frozen=True)
class USeries:
    """Series in one variable y, truncated at order K (inclusive)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series stores at least its constant term")
        object.__setattr__(self, "coeffs", tuple(_as_fraction(c) for c in self.coeffs))

    @staticmethod
    def from_list(coeffs) -> "USeries":
        return USeries(tuple(coeffs))

    @staticmethod
    def constant(value, order: int) -> "USeries":
        return USeries((_as_fraction(value),) + (_ZERO,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else _ZERO

    def truncate(self, order: int) -> "USeries":
        if order >= self.order:
            return self
        return USeries(self.coeffs[: order + 1])

    def __add__(self, other: "USeries") -> "USeries":
        # Mixed orders truncate to the shorter operand.
        k = min(self.order, other.order)
        return USeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(k + 1)))

    def __sub__(self, other: "USeries") -> "USeries":
        k = min(self.order, other.order)
        return USeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(k + 1)))

    def __neg__(self) -> "USeries":
        return USeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return USeries(tuple(c * other for c in self.coeffs))
        if not isinstance(other, USeries):
            return NotImplemented
        k = min(self.order, other.order)
        out = [_ZERO] * (k + 1)
        for i, a in enumerate(self.coeffs[: k + 1]):
            if a == 0:
                continue
            for j in range(k + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return USeries(tuple(out))

    __rmul__ = __mul__

    def recip(self) -> "USeries":
        """Multiplicative inverse up to the stored order.

        Requires a unit constant term; solved by the triangular recurrence
        b_0 = 1/a_0, b_k = -(sum_{i=1..k} a_i b_{k-i}) / a_0.
        """
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ValueError("non-unit series: constant term is zero")
        inv0 = 1 / a0
        out = [inv0] + [_ZERO] * self.order
        for k in range(1, self.order + 1):
            acc = _ZERO
            for i in range(1, k + 1):
                ai = self.coeffs[i]
                if ai:
                    acc += ai * out[k - i]
            out[k] = -acc * inv0
        return USeries(tuple(out))

    def scale_variable(self, r) -> "USeries":
        """Substitute y -> r*y for an exact rational r."""
        r = _as_fraction(r)
        return USeries(tuple(c * r**k for k, c in enumerate(self.coeffs)))

    def shift_up(self) -> "USeries":
        """Multiply by y, keeping the order (top coefficient falls off)."""
        return USeries((_ZERO,) + self.coeffs[:-1])

    def __str__(self) -> str:
        parts = [f"{c}*y^{k}" for k, c in enumerate(self.coeffs) if c] or ["0"]
        return " + ".join(parts) + f" + O(y^{self.order + 1})"


@dataclass(frozen=True)
class BiSeries:
    """Series in two variables y, v truncated at orders (K, D).

    ``coeffs[k][d]`` is the coefficient of y**k v**d.
    """

    coeffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("empty bivariate series")
        width = len(self.coeffs[0])
        if any(len(row) != width for row in self.coeffs):
            raise ValueError("ragged coefficient table")
        object.__setattr__(
            self,
            "coeffs",
            tuple(tuple(_as_fraction(c) for c in row) for row in self.coeffs),
        )

    @property
    def order_y(self) -> int:
        return len(self.coeffs) - 1

    @property
    def order_v(self) -> int:
        return len(self.coeffs[0]) - 1

    def coeff(self, k: int, d: int) -> Fraction:
        if 0 <= k <= self.order_y and 0 <= d <= self.order_v:
            return self.coeffs[k][d]
        return _ZERO

    def __add__(self, other: "BiSeries") -> "BiSeries":
        ky = min(self.order_y, other.order_y)
        kv = min(self.order_v, other.order_v)
        return BiSeries(
            tuple(
                tuple(self.coeffs[k][d] + other.coeffs[k][d] for d in range(kv + 1))
                for k in range(ky + 1)
            )
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiSeries(tuple(tuple(c * other for c in row) for row in self.coeffs))
        if isinstance(other, USeries):
            other = BiSeries.from_useries(other, self.order_v)
        if not isinstance(other, BiSeries):
            return NotImplemented
        ky = min(self.order_y, other.order_y)
        kv = min(self.order_v, other.order_v)
        out = [[_ZERO] * (kv + 1) for _ in range(ky + 1)]
        for k1 in range(ky + 1):
            row1 = self.coeffs[k1]
            for d1 in range(min(kv, self.order_v) + 1):
                a = row1[d1]
                if a == 0:
                    continue
                for k2 in range(ky + 1 - k1):
                    row2 = other.coeffs[k2]
                    for d2 in range(kv + 1 - d1):
                        b = row2[d2]
                        if b:
                            out[k1 + k2][d1 + d2] += a * b
        return BiSeries(tuple(tuple(row) for row in out))

    __rmul__ = __mul__

    @staticmethod
    def from_useries(s: USeries, order_v: int) -> "BiSeries":
        return BiSeries(
            tuple((c,) + (_ZERO,) * order_v for c in s.coeffs)
        )


def cos_sqrt_series(order: int) -> USeries:
    """c(y) = cos(sqrt(y)) = sum_{n<=K} (-1)**n y**n / (2n)!.

    Under y = pi**2 u/4 this is cos(pi*sqrt(u)/2); under y = pi**2 u it is
    cos(pi*sqrt(u)).  Substituting y -> -y gives the cosh analogue.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    return USeries(
        tuple(Fraction((-1) ** n, factorial(2 * n)) for n in range(order + 1))
    )


def sin_sqrt_series(order: int) -> USeries:
    """s(y) = sin(sqrt(y))/sqrt(y) = sum_{n<=K} (-1)**n y**n / (2n+1)!."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return USeries(
        tuple(Fraction((-1) ** n, factorial(2 * n + 1)) for n in range(order + 1))
    )


def genfunc_biseries(order: int) -> BiSeries:
    """Bivariate expansion of c((1-v)y) / c(y) to order K in both y and v.

    The y**n v**d coefficient times pi**(2n) / 4**n is the sum T(2n,d) of
    all multiple t-values of weight 2n and depth d.  Rows with d > n vanish,
    and the d = 0 column is 1, 0, 0, ... since the v = 0 slice collapses to
    c(y)/c(y).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    K = order
    # c((1-v)y): coefficient of y**n v**i is (-1)**n/(2n)! * binom(n,i)*(-1)**i.
    numerator = BiSeries(
        tuple(
            tuple(
                Fraction((-1) ** (n + i) * comb(n, i), factorial(2 * n))
                for i in range(K + 1)
            )
            for n in range(K + 1)
        )
    )
    return numerator * cos_sqrt_series(K).recip()


def tan_link_series(order: int) -> USeries:
    """Normalized half-angle tangent series (y/2) * s(y) / c(y) at y = pi**2 u.

    Its y**m coefficient is the rational slot of 4**m * t(2m): multiplying
    coefficient m by pi**(2m) recovers 4**m t(2m), which is the coefficient
    of u**m in (pi*sqrt(u)/2) tan(pi*sqrt(u)).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    s = sin_sqrt_series(order)
    c = cos_sqrt_series(order)
    return (s * c.recip() * Fraction(1, 2)).shift_up()


def tan_link_expected(m: int) -> Fraction:
    """Independent target for the tan-link slot: 4**m * t(2m) / pi**(2m)."""
    return t_even(m).coeff * 4**m
