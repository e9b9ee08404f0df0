"""Finite-variable symmetric polynomials and the t-value specialization.

Works in the polynomial ring Q[x_1..x_m].  Degree-n identities among
symmetric functions hold in the infinite ring iff they hold in m >= n
variables, so the verification routines take m large enough and check exact
polynomial equality:

* ``1 + sum N_{n,d} u**n v**d = E((v-1)u) * H(u)``, where N_{n,d} is the sum
  of monomial symmetric functions over partitions of n with exactly d parts
  and E, H are the elementary / complete generating functions;
* ``N_{n,d} = sum_{l=0}^{n-d} binom(n-l,d) (-1)**(n-d-l) h_l e_{n-l}``.

The specialization x_j -> 1/(2j-1)**2 sends p_n to t(2n), e_n to the
all-twos value t({2}**n) and N_{n,d} to T(2n,d); it extends to infinitely
many variables, so the numeric image is computed from generator expressions
(:class:`GenExpr`), truncated at a finite number of variables with a tail
bound attached.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import mpmath as mp

from .exact import binomial
from .oracle import PrecReal

__all__ = [
    "SymPoly",
    "elementary",
    "complete",
    "power_sum",
    "monomial_depth_sum",
    "check_bivariate_factorization",
    "check_monomial_expansion",
    "GenExpr",
    "monomial_depth_expr",
    "specialize_odd_squares",
]

_ZERO = Fraction(0)


class SymPoly:
    """Sparse multivariate polynomial over Q in a fixed number of variables.

    Treated as immutable after construction; zero coefficients are never
    stored.  Instances produced by this module are symmetric, which
    :meth:`is_symmetric` checks against a generating set of permutations
    (the transposition x_1 <-> x_2 and the full cyclic shift).
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict[tuple[int, ...], Fraction] | None = None):
        if num_vars < 1:
            raise ValueError(f"need at least one variable, got {num_vars}")
        self.num_vars = num_vars
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != num_vars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            if c:
                clean[exps] = Fraction(c)
        self.terms = clean

    @staticmethod
    def constant(value, num_vars: int) -> "SymPoly":
        return SymPoly(num_vars, {(0,) * num_vars: Fraction(value)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def _require_same_vars(self, other: "SymPoly") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"variable count mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._require_same_vars(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, _ZERO) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return SymPoly(self.num_vars, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return SymPoly(self.num_vars)
            return SymPoly(
                self.num_vars, {e: c * other for e, c in self.terms.items()}
            )
        if not isinstance(other, SymPoly):
            return NotImplemented
        self._require_same_vars(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, _ZERO) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return SymPoly(self.num_vars, out)

    __rmul__ = __mul__

    def is_symmetric(self) -> bool:
        if self.num_vars == 1:
            return True
        for image in (_swap_first_two, _cycle):
            for exps, c in self.terms.items():
                if self.terms.get(image(exps), _ZERO) != c:
                    return False
        return True

    def __repr__(self) -> str:
        if not self.terms:
            return "SymPoly(0)"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            mono = "*".join(
                f"x{i+1}^{e}" if e > 1 else f"x{i+1}"
                for i, e in enumerate(exps)
                if e
            ) or "1"
            bits.append(f"{self.terms[exps]}*{mono}")
        return "SymPoly(" + " + ".join(bits) + ")"


def _swap_first_two(exps: tuple[int, ...]) -> tuple[int, ...]:
    return (exps[1], exps[0]) + exps[2:]


def _cycle(exps: tuple[int, ...]) -> tuple[int, ...]:
    return exps[1:] + (exps[0],)


@lru_cache(maxsize=None)
def elementary(j: int, m: int) -> SymPoly:
    """e_j in m variables; zero for j > m, one for j = 0."""
    if j < 0:
        raise ValueError(f"degree must be >= 0, got {j}")
    if j > m:
        return SymPoly(m)
    terms = {}
    for subset in itertools.combinations(range(m), j):
        exps = [0] * m
        for i in subset:
            exps[i] = 1
        terms[tuple(exps)] = Fraction(1)
    return SymPoly(m, terms)


@lru_cache(maxsize=None)
def complete(j: int, m: int) -> SymPoly:
    """h_j in m variables (all monomials of degree j)."""
    if j < 0:
        raise ValueError(f"degree must be >= 0, got {j}")
    terms = {}
    for combo in itertools.combinations_with_replacement(range(m), j):
        exps = [0] * m
        for i in combo:
            exps[i] += 1
        terms[tuple(exps)] = Fraction(1)
    return SymPoly(m, terms)


def power_sum(j: int, m: int) -> SymPoly:
    """p_j = x_1**j + ... + x_m**j; p_0 is the constant m by convention."""
    if j < 0:
        raise ValueError(f"degree must be >= 0, got {j}")
    if j == 0:
        return SymPoly.constant(m, m)
    terms = {}
    for i in range(m):
        exps = [0] * m
        exps[i] = j
        terms[tuple(exps)] = Fraction(1)
    return SymPoly(m, terms)


def _partitions_exact(n: int, d: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n into exactly d parts, weakly decreasing."""
    if d == 0:
        if n == 0:
            yield ()
        return
    top = n - d + 1 if max_part is None else min(max_part, n - d + 1)
    for first in range(top, 0, -1):
        if first * d < n:
            break
        for rest in _partitions_exact(n - first, d - 1, first):
            yield (first,) + rest


def monomial_depth_sum(n: int, d: int, m: int) -> SymPoly:
    """N_{n,d}: sum of monomial symmetric functions m_lambda over partitions
    of n with exactly d parts, in m variables.  Zero when d > n.

    Faithful (no truncation artifacts) when m >= n.
    """
    if n < 1 or d < 1:
        raise ValueError(f"require n >= 1 and d >= 1, got n={n}, d={d}")
    if d > m:
        raise ValueError(f"depth {d} exceeds variable count {m}")
    terms: dict[tuple[int, ...], Fraction] = {}
    for lam in _partitions_exact(n, d):
        padded = lam + (0,) * (m - d)
        for perm in set(itertools.permutations(padded)):
            terms[perm] = Fraction(1)
    return SymPoly(m, terms)


@lru_cache(maxsize=None)
def _he_product(ell: int, k: int, m: int) -> SymPoly:
    return complete(ell, m) * elementary(k, m)


def check_monomial_expansion(n: int, d: int, m: int) -> bool:
    """Exact check of N_{n,d} = sum_l binom(n-l,d) (-1)**(n-d-l) h_l e_{n-l}."""
    if not (1 <= d <= n <= m):
        raise ValueError(f"require 1 <= d <= n <= m, got n={n}, d={d}, m={m}")
    rhs = SymPoly(m)
    for ell in range(n - d + 1):
        c = binomial(n - ell, d) * (-1) ** (n - d - ell)
        if c:
            rhs = rhs + c * _he_product(ell, n - ell, m)
    return monomial_depth_sum(n, d, m) == rhs


def check_bivariate_factorization(n_max: int, m: int) -> bool:
    """Exact check, for all u-degrees n <= n_max and all v-degrees, that

    1 + sum_{n>=d>=1} N_{n,d} u**n v**d  =  E((v-1)u) * H(u).

    The u**n v**d coefficient of the right side is
    sum_j (-1)**(j-d) binom(j,d) e_j h_{n-j}.
    """
    if not (1 <= n_max <= m):
        raise ValueError(f"require 1 <= n_max <= m, got n_max={n_max}, m={m}")
    for n in range(n_max + 1):
        for d in range(n + 1):
            rhs = SymPoly(m)
            for j in range(d, n + 1):
                c = (-1) ** (j - d) * binomial(j, d)
                if c:
                    rhs = rhs + c * (elementary(j, m) * complete(n - j, m))
            if n == 0:
                lhs = SymPoly.constant(1, m)
            elif d == 0:
                lhs = SymPoly(m)
            else:
                lhs = monomial_depth_sum(n, d, m)
            if lhs != rhs:
                return False
    return True


class GenExpr:
    """Exact linear combination of products of e/h/p generators.

    Keys are sorted tuples of (kind, index) factors; the empty tuple is the
    constant term.  Written in generators (rather than expanded monomials)
    so the infinite-variable specialization below applies directly.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[tuple[str, int], ...], Fraction] | None = None):
        self.terms: dict[tuple[tuple[str, int], ...], Fraction] = {}
        for key, c in (terms or {}).items():
            if c:
                self.terms[tuple(sorted(key))] = Fraction(c)

    @staticmethod
    def const(c) -> "GenExpr":
        return GenExpr({(): Fraction(c)})

    @staticmethod
    def _gen(kind: str, j: int) -> "GenExpr":
        if j < 0:
            raise ValueError(f"generator index must be >= 0, got {j}")
        if j == 0:
            if kind == "p":
                raise ValueError("p_0 is not a generator")
            return GenExpr.const(1)
        return GenExpr({((kind, j),): Fraction(1)})

    @staticmethod
    def elem(j: int) -> "GenExpr":
        return GenExpr._gen("e", j)

    @staticmethod
    def homog(j: int) -> "GenExpr":
        return GenExpr._gen("h", j)

    @staticmethod
    def power(j: int) -> "GenExpr":
        return GenExpr._gen("p", j)

    def __add__(self, other: "GenExpr") -> "GenExpr":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, _ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return GenExpr(out)

    def __sub__(self, other: "GenExpr") -> "GenExpr":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GenExpr({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, GenExpr):
            return NotImplemented
        out: dict[tuple[tuple[str, int], ...], Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(sorted(k1 + k2))
                s = out.get(key, _ZERO) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return GenExpr(out)

    __rmul__ = __mul__


def monomial_depth_expr(n: int, d: int) -> GenExpr:
    """N_{n,d} written in the h/e generators (valid in the infinite ring)."""
    if n < 1 or d < 1:
        raise ValueError(f"require n >= 1 and d >= 1, got n={n}, d={d}")
    out = GenExpr()
    for ell in range(n - d + 1):
        c = binomial(n - ell, d) * (-1) ** (n - d - ell)
        if c:
            out = out + c * (GenExpr.homog(ell) * GenExpr.elem(n - ell))
    return out


@lru_cache(maxsize=None)
def _generator_value(kind: str, j: int, num_vars: int, dps: int):
    """Numeric image of one generator under x_i -> 1/(2i-1)**2, truncated to
    the first num_vars variables.  Returns (value, err) as mpf.

    Tail bounds: with T = sum_{i>num_vars} x_i <= 1/(2(2M-1)),
      e_j misses at most sum_{r>=1} e_{j-r}(<=M) T**r / r!,
      h_j misses at most sum_{r>=1} h_{j-r}(<=M) T**r,
    since the elementary (resp. complete) functions of the dropped tail are
    bounded by T**r/r! (resp. T**r).
    """
    M = num_vars
    with mp.workdps(dps + 10):
        tail_p1 = mp.mpf(1) / (2 * (2 * M - 1))
        rounding = mp.mpf(10) ** (10 - dps)
        if kind == "p":
            value = mp.mpf(0)
            for i in range(1, M + 1):
                value += mp.mpf(1) / (2 * i - 1) ** (2 * j)
            err = mp.mpf(2 * M - 1) ** (1 - 2 * j) / (2 * (2 * j - 1))
            return +value, +(err + rounding)
        # Shared DP for e_j and h_j: coefficients of prod (1 + u x_i) or
        # prod 1/(1 - u x_i) truncated at degree j.
        c = [mp.mpf(0)] * (j + 1)
        c[0] = mp.mpf(1)
        if kind == "e":
            for i in range(1, M + 1):
                x = mp.mpf(1) / (2 * i - 1) ** 2
                for r in range(j, 0, -1):
                    c[r] += c[r - 1] * x
            err = mp.mpf(0)
            for r in range(1, j + 1):
                err += c[j - r] * tail_p1**r / math.factorial(r)
            return +c[j], +(err + rounding)
        if kind == "h":
            for i in range(1, M + 1):
                x = mp.mpf(1) / (2 * i - 1) ** 2
                for r in range(1, j + 1):
                    c[r] += c[r - 1] * x
            err = mp.mpf(0)
            for r in range(1, j + 1):
                err += c[j - r] * tail_p1**r
            return +c[j], +(err + rounding)
    raise ValueError(f"unknown generator kind {kind!r}")


def specialize_odd_squares(
    expr: GenExpr, num_vars: int = 50_000, dps: int = 30
) -> PrecReal:
    """Numeric image of a generator expression under x_j -> 1/(2j-1)**2.

    Truncates the variable list at num_vars and attaches a first-order tail
    bound; the value itself is the truncated specialization.
    """
    if num_vars < 2:
        raise ValueError(f"need at least 2 variables, got {num_vars}")
    with mp.workdps(dps + 10):
        total = mp.mpf(0)
        total_err = mp.mpf(0)
        for key, coeff in expr.terms.items():
            vals = [_generator_value(kind, j, num_vars, dps) for kind, j in key]
            prod = mp.mpf(1)
            for v, _ in vals:
                prod *= v
            term_err = mp.mpf(0)
            for i, (_, e) in enumerate(vals):
                piece = e
                for k, (v, ek) in enumerate(vals):
                    if k != i:
                        piece *= abs(v) + ek
                term_err += piece
            c = mp.mpf(coeff.numerator) / coeff.denominator
            total += c * prod
            total_err += abs(c) * term_err
        return PrecReal(+total, +total_err)
