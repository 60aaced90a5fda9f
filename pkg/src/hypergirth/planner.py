"""Exact parameter arithmetic for the recursive constructions.

Everything here is exact: orders are PowerExpr values with rational
exponents, vertex/edge counts are big integers, and every inequality is
decided by integer comparison after clearing denominators.  The only
floating point in the module is the high-precision (mpmath) evaluation of
the asymptotic exponents in :func:`theorem_bound`, which certifies
nothing.

Two parameter families are covered:

* girth-6 route: orders q_1 = p^m, q_n = p * q_{n-1}^9, substrate with
  v(q) = (1+q)(1+q^4+q^8) and b(q) = (1+q^3)(1+q^4+q^8);
* girth-8 route: orders q'_1 = 2^m, q'_n = 2 * q'_{n-1}^10, substrate
  with v'(q) = (1+q)(1+q^3+q^6+q^9) and b'(q) = (1+q^2)(1+q^3+q^6+q^9).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

from .arith import (
    DEFAULT_DIGIT_BUDGET,
    PowerExpr,
    checked_pow,
    int_digits10,
    is_prime,
    short_decimal,
)
from .errors import PreconditionError

EIGHTH = Fraction(1, 8)
NINTH = Fraction(1, 9)


@dataclass(frozen=True)
class HexagonParams:
    """Color-class sizes of the girth-12 substrate of order (q^3, q)."""

    q: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise PreconditionError(f"hexagon parameter q must be >= 2, got {self.q}")

    @property
    def v(self) -> int:
        return (1 + self.q) * (1 + self.q**4 + self.q**8)

    @property
    def b(self) -> int:
        return (1 + self.q**3) * (1 + self.q**4 + self.q**8)


@dataclass(frozen=True)
class OctagonParams:
    """Color-class sizes of the girth-16 substrate of order (q^2, q);
    exists only for q an odd power of 2."""

    q: int

    def __post_init__(self) -> None:
        m = self.q.bit_length() - 1
        if self.q < 2 or self.q != 1 << m or m % 2 == 0:
            raise PreconditionError(f"octagon parameter q must be an odd power of 2, got {self.q}")

    @property
    def v(self) -> int:
        return (1 + self.q) * (1 + self.q**3 + self.q**6 + self.q**9)

    @property
    def b(self) -> int:
        return (1 + self.q**2) * (1 + self.q**3 + self.q**6 + self.q**9)


def hexagon_params(q: int) -> HexagonParams:
    return HexagonParams(q)


def octagon_params(q: int) -> OctagonParams:
    return OctagonParams(q)


def _check_hexagon_assumptions(p: int, m: int, n: int) -> None:
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    if m < 2:
        raise PreconditionError(f"m must be >= 2, got {m}")
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if p ** (m - 1) < 5:
        raise PreconditionError(f"p^(m-1) = {p ** (m - 1)} violates the standing assumption >= 5")


def q_sequence(p: int, m: int, n: int) -> PowerExpr:
    """n-th order of the girth-6 route: q_1 = p^m, q_n = p * q_{n-1}^9.

    Returns the closed form p^(9^(n-1) * (m + 1/8) - 1/8), cross-checked
    exactly against the recursion e_n = 9 * e_{n-1} + 1.
    """
    _check_hexagon_assumptions(p, m, n)
    closed = 9 ** (n - 1) * (m + EIGHTH) - EIGHTH
    e = Fraction(m)
    for _ in range(n - 1):
        e = 9 * e + 1
    if e != closed:
        raise PreconditionError(f"closed form {closed} disagrees with recursion {e}")
    return PowerExpr(p, closed)


def _check_octagon_assumptions(m: int, n: int) -> None:
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if m < 5:
        raise PreconditionError(f"m must be >= 5, got {m}")
    if m % 2 == 0 and n == 1:
        raise PreconditionError(f"m = {m} is even: 2^m is not an odd power of 2")


def q_prime_sequence(m: int, n: int) -> PowerExpr:
    """n-th order of the girth-8 route: q'_1 = 2^m, q'_n = 2 * q'_{n-1}^10.

    Closed form 2^(10^(n-1) * (m + 1/9) - 1/9), cross-checked against the
    recursion.  The resulting exponent is always odd, so every order in
    the sequence is a valid octagon parameter; even m is accepted for
    n >= 2 (where the exponent is odd regardless), which the planner's
    level-crossing identity needs.
    """
    _check_octagon_assumptions(m, n)
    closed = 10 ** (n - 1) * (m + NINTH) - NINTH
    e = Fraction(m)
    for _ in range(n - 1):
        e = 10 * e + 1
    if e != closed:
        raise PreconditionError(f"closed form {closed} disagrees with recursion {e}")
    if closed.denominator != 1 or closed.numerator % 2 == 0:
        raise PreconditionError(f"order exponent {closed} is not an odd integer")
    return PowerExpr(2, closed)


def edge_bound_hexagon(p: int, m: int, n: int) -> PowerExpr:
    """Edge-count lower bound p^((11/8) * (9^n (m + 1/8) - (n + m + 1/8)))
    for the n-th girth-6 construction; the exponent is always an integer."""
    _check_hexagon_assumptions(p, m, n)
    inner = 9**n * (m + EIGHTH) - (n + m + EIGHTH)
    exponent = Fraction(11, 8) * inner
    if exponent.denominator != 1:
        raise PreconditionError(f"edge bound exponent {exponent} is not integral")
    return PowerExpr(p, exponent)


def edge_bound_octagon(m: int, n: int) -> PowerExpr:
    """Edge-count lower bound 2^((11/9) * (10^n (m + 1/9) - (n + m + 1/9)))
    for the n-th girth-8 construction; the exponent is always an integer."""
    _check_octagon_assumptions(m, n)
    inner = 10**n * (m + NINTH) - (n + m + NINTH)
    exponent = Fraction(11, 9) * inner
    if exponent.denominator != 1:
        raise PreconditionError(f"edge bound exponent {exponent} is not integral")
    return PowerExpr(2, exponent)


def epsilon(m: int, n: int) -> Fraction:
    """Relative slack (n + m + 1/8) / (9^n (m + 1/8)) between the edge
    bound and the 11/8 power of the vertex bound; always in (0, 1)."""
    if m < 1 or n < 1:
        raise PreconditionError("epsilon needs m >= 1 and n >= 1")
    return (n + m + EIGHTH) / (9**n * (m + EIGHTH))


def _hexagon_v_vs(p: int, m: int, n: int, value: int, digit_budget: int | None) -> int:
    """Exact sign of v(q_{p,m,n}) - value, avoiding the big expansion
    whenever a digit bound already decides the comparison."""
    e = q_sequence(p, m, n).exponent
    assert e.denominator == 1
    low = 9 * int(e) * math.log10(p)  # v > q^9
    high = (9 * int(e) + 3) * math.log10(p) + 1  # v < 6 q^9 < p^3 q^9
    nd = int_digits10(value)
    if low > nd + 2:
        return 1
    if high < nd - 2:
        return -1
    q = checked_pow(p, int(e), digit_budget, f"v({p}^{e})")
    v = (1 + q) * (1 + q**4 + q**8)
    return (v > value) - (v < value)


def _octagon_v_vs(m: int, n: int, value: int, digit_budget: int | None) -> int:
    """Exact sign of v'(q'_{2,m,n}) - value with the same digit shortcut."""
    e = q_prime_sequence(m, n).exponent
    low = 10 * int(e) * math.log10(2)
    high = (10 * int(e) + 3) * math.log10(2) + 1
    nd = int_digits10(value)
    if low > nd + 2:
        return 1
    if high < nd - 2:
        return -1
    q = checked_pow(2, int(e), digit_budget, f"v'(2^{e})")
    v = (1 + q) * (1 + q**3 + q**6 + q**9)
    return (v > value) - (v < value)


@dataclass(frozen=True)
class PlanResult:
    """Chosen (m, n) for a vertex budget, plus the seed the search grew
    from: minimal admissible (m*, n*) and its vertex count N*."""

    m: int
    n: int
    m_star: int
    n_star: int
    seed_vertices: int


class BelowSeedError(PreconditionError):
    """N is smaller than the smallest admissible construction N*."""

    def __init__(self, n_value: int, seed_vertices: int):
        self.seed_vertices = seed_vertices
        super().__init__(
            f"N = {short_decimal(n_value)} is below the seed vertex count "
            f"N* = {short_decimal(seed_vertices)}"
        )


def plan_parameters_hexagon(
    p: int, r: int, n_vertices: int, digit_budget: int | None = DEFAULT_DIGIT_BUDGET
) -> PlanResult:
    """Pick (m, n) with v(q_{p,m,n}) <= N < v(q_{p,m+1,n}) by bounded
    lattice search with exact comparisons.

    The seed (m*, n*) is the smallest m with p^(m-1) >= 5 and p^m >= r-1,
    together with the n* bracketing it (9^(n*-1) <= m* < 9^n*).  The
    returned pair additionally satisfies m* <= m, n* <= n and
    9^(n-1) <= m <= 9^(n+1); both sandwich inequalities are re-checked
    exactly before returning.
    """
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    if r < 2:
        raise PreconditionError(f"r must be >= 2, got {r}")
    m_star = 2
    while p ** (m_star - 1) < 5 or p**m_star < r - 1:
        m_star += 1
    n_star = 1
    while not (9 ** (n_star - 1) <= m_star < 9**n_star):
        n_star += 1
    q = q_sequence(p, m_star, n_star).expand(digit_budget)
    seed_vertices = (1 + q) * (1 + q**4 + q**8)
    if n_vertices < seed_vertices:
        raise BelowSeedError(n_vertices, seed_vertices)

    n = n_star
    while True:
        m_lo = max(m_star, 9 ** (n - 1))
        m_hi = 9 ** (n + 1)
        if _hexagon_v_vs(p, m_lo, n, n_vertices, digit_budget) > 0:
            raise PreconditionError(
                f"no admissible (m, n) found for N = {short_decimal(n_vertices)}"
            )  # unreachable for N >= N*
        lo, hi = m_lo, m_hi  # invariant: v(q_{p,lo,n}) <= N
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if _hexagon_v_vs(p, mid, n, n_vertices, digit_budget) <= 0:
                lo = mid
            else:
                hi = mid - 1
        if _hexagon_v_vs(p, lo + 1, n, n_vertices, digit_budget) > 0:
            m = lo
            break
        n += 1  # N >= v(q_{p, 9^(n+1)+1, n}) = v(q_{p, 9^n, n+1}): climb a level

    if not (_hexagon_v_vs(p, m, n, n_vertices, digit_budget) <= 0
            and _hexagon_v_vs(p, m + 1, n, n_vertices, digit_budget) > 0):
        raise PreconditionError("sandwich re-check failed")  # unreachable
    return PlanResult(m, n, m_star, n_star, seed_vertices)


def plan_parameters_octagon(
    r: int, n_vertices: int, digit_budget: int | None = DEFAULT_DIGIT_BUDGET
) -> PlanResult:
    """Octagon analogue of :func:`plan_parameters_hexagon`: m steps over
    odd values, the sandwich is v'(q'_{2,m,n}) <= N < v'(q'_{2,m+2,n}),
    and 10^(n-1) - 1 <= m <= 10^(n+1) - 1."""
    if r < 2:
        raise PreconditionError(f"r must be >= 2, got {r}")
    m_star = 5
    while r > 1 + 2**m_star:
        m_star += 2
    n_star = 1
    while not (10 ** (n_star - 1) - 1 <= m_star <= 10**n_star - 1):
        n_star += 1
    q = q_prime_sequence(m_star, n_star).expand(digit_budget)
    seed_vertices = (1 + q) * (1 + q**3 + q**6 + q**9)
    if n_vertices < seed_vertices:
        raise BelowSeedError(n_vertices, seed_vertices)

    n = n_star
    while True:
        lo_bound = max(m_star, 10 ** (n - 1) - 1)
        m_lo = lo_bound if lo_bound % 2 == 1 else lo_bound + 1
        m_hi = 10 ** (n + 1) - 1
        if _octagon_v_vs(m_lo, n, n_vertices, digit_budget) > 0:
            raise PreconditionError(
                f"no admissible (m, n) found for N = {short_decimal(n_vertices)}"
            )  # unreachable for N >= N*
        lo, hi = m_lo, m_hi  # odd endpoints; invariant: v'(q'_{2,lo,n}) <= N
        while lo < hi:
            mid = (lo + hi + 2) // 2
            if mid % 2 == 0:
                mid += 1
            if mid > hi:
                mid = hi
            if _octagon_v_vs(mid, n, n_vertices, digit_budget) <= 0:
                lo = mid
            else:
                hi = mid - 2
        if _octagon_v_vs(lo + 2, n, n_vertices, digit_budget) > 0:
            m = lo
            break
        n += 1  # N >= v'(q'_{2, 10^(n+1)+1, n}) = v'(q'_{2, 10^n, n+1})

    if not (_octagon_v_vs(m, n, n_vertices, digit_budget) <= 0
            and _octagon_v_vs(m + 2, n, n_vertices, digit_budget) > 0):
        raise PreconditionError("sandwich re-check failed")  # unreachable
    return PlanResult(m, n, m_star, n_star, seed_vertices)


@dataclass(frozen=True)
class TheoremBound:
    """Asymptotic edge-bound exponent at a concrete N.

    ``exponent`` evaluates the display form exactly as printed
    (girth 6: (11/8)(1 - 33/sqrt(log_p N)); girth 8:
    (11/9)(1 - 13 sqrt(10/log2 N))) in high precision.  ``bound`` is
    N raised to that exponent rounded *down* to a multiple of 1/72, so it
    is always a true lower bound.  ``derived_constant`` restates the
    display in the c/sqrt(log2 N) shape; it is derived here, not quoted.
    """

    girth: int
    exponent: float
    bound: PowerExpr
    derived_constant: float


def theorem_bound(girth: int, p: int | None, n_vertices: int) -> TheoremBound:
    """High-precision exponent of the edge-count lower bound at N vertices.

    Negative exponents are returned as-is (the bound is then vacuous).
    For girth 8 the base is fixed at 2 and ``p`` is ignored.
    """
    if n_vertices < 2:
        raise PreconditionError(f"N must be >= 2, got {n_vertices}")
    with mp.workdps(60):
        if girth == 6:
            if p is None or not is_prime(p):
                raise PreconditionError(f"girth-6 bound needs a prime p, got {p}")
            log_p_n = mp.log(mpf(n_vertices)) / mp.log(p)
            expo = mpf(11) / 8 * (1 - 33 / mp.sqrt(log_p_n))
            constant = float(mpf(11) / 8 * 33 * mp.sqrt(mp.log(p, 2)))
        elif girth == 8:
            log2_n = mp.log(mpf(n_vertices), 2)
            expo = mpf(11) / 9 * (1 - 13 * mp.sqrt(mpf(10) / log2_n))
            constant = float(mpf(11) / 9 * 13 * mp.sqrt(mpf(10)))
        else:
            raise PreconditionError(f"girth must be 6 or 8, got {girth}")
        floored = Fraction(int(mp.floor(expo * 72)), 72)
        return TheoremBound(girth, float(expo), PowerExpr(n_vertices, floored), constant)
