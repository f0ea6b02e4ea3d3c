"""Counting V-posets: exact series, a constructive census, and asymptotics.

The number v_n of V-posets on n elements satisfies a multiset (Euler
transform) relation with the counts q_n of connected V-posets (those with a
greatest or least element):

    q_1 = 1,   q_n = 2*v_(n-1) - v_(n-2)   for n >= 2,
    c_k = sum of d*q_d over divisors d of k,
    n*v_n = sum of c_k * v_(n-k) for k = 1..n,   v_0 = 1.

All series arithmetic is integer-only; the division by n is asserted exact.
The census rebuilds the same counts object by object as a cross-check.

Asymptotically v_n grows like C * n**-1.5 * rho**-n where rho solves
R(rho) = 1/e for

    R(x) = x(1-x)(2-x) * exp( sum over m >= 2 of W(x**m)/m ),

W(x) = x(2-x)V(x) being the series with coefficients w_1 = 2, w_n = q_n.
The prefactor is C = sqrt(e*R'(rho)) / (sqrt(2*pi*rho) * (2-rho)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterator

from .errors import OracleBoundError
from .posets import Poset, _element_signatures, poset_isomorphic

CENSUS_BOUND = 8

# Tail terms of the inner sum are dropped once x**m falls below this; the
# sum converges geometrically because x**2 stays well inside the radius.
_INNER_CUTOFF = 1e-18


@dataclass(frozen=True)
class IntSeries:
    """A truncated integer power series: coeffs[k] is exact for k <= order."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient vector does not match the order")

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]


def v_series(order: int) -> IntSeries:
    """Counts of V-posets by size, v_0..v_order, via the integer recurrence."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    v = [1]
    q = [0]
    c = [0]
    for n in range(1, order + 1):
        q.append(1 if n == 1 else 2 * v[n - 1] - v[n - 2])
        c.append(sum(d * q[d] for d in range(1, n + 1) if n % d == 0))
        total = sum(c[k] * v[n - k] for k in range(1, n + 1))
        if total % n:
            raise ArithmeticError(
                f"multiset recurrence produced a non-integer coefficient at n={n}"
            )
        v.append(total // n)
    return IntSeries(order, tuple(v))


def q_series(order: int) -> IntSeries:
    """Counts of connected V-posets (with a greatest or least element)."""
    if order < 1:
        raise ValueError("order must be at least 1")
    v = v_series(order - 1).coeffs
    coeffs = [0, 1] + [2 * v[n - 1] - v[n - 2] for n in range(2, order + 1)]
    return IntSeries(order, tuple(coeffs))


def w_series(order: int) -> IntSeries:
    """Coefficients of x*(2-x)*V(x): the connected counts with w_1 = 2."""
    q = q_series(order)
    coeffs = list(q.coeffs)
    coeffs[1] = 2
    return IntSeries(order, tuple(coeffs))


# ----------------------------------------------------------------------
# constructive census

@lru_cache(maxsize=None)
def connected_vposets(n: int) -> tuple[Poset, ...]:
    """One representative per isomorphism class of connected V-posets on n."""
    if n > CENSUS_BOUND:
        raise OracleBoundError(f"the census is bounded at {CENSUS_BOUND} elements")
    if n < 1:
        raise ValueError("connected posets have at least one element")
    if n == 1:
        return (Poset(1, (0,)),)
    candidates: list[Poset] = []
    for p in all_vposets(n - 1):
        candidates.append(p.add_greatest())
        candidates.append(p.add_least())
    return tuple(_dedup_classes(candidates))


def _dedup_classes(candidates: list[Poset]) -> list[Poset]:
    buckets: dict[tuple, list[Poset]] = {}
    out: list[Poset] = []
    for p in candidates:
        key = (p.n, p.relation_count, tuple(sorted(_element_signatures(p))))
        group = buckets.setdefault(key, [])
        if not any(poset_isomorphic(p, rep) for rep in group):
            group.append(p)
            out.append(p)
    return out


def _component_multisets(
    total: int, size_cap: int, index_cap: int | None
) -> Iterator[tuple[Poset, ...]]:
    # Multisets of connected classes, nonincreasing in (size, class index),
    # so every unlabeled poset arises from exactly one multiset.
    if total == 0:
        yield ()
        return
    for s in range(min(total, size_cap), 0, -1):
        pool = connected_vposets(s)
        start = index_cap if (s == size_cap and index_cap is not None) else len(pool) - 1
        for i in range(start, -1, -1):
            for rest in _component_multisets(total - s, s, i):
                yield (pool[i],) + rest


@lru_cache(maxsize=None)
def all_vposets(n: int) -> tuple[Poset, ...]:
    """One representative per isomorphism class of V-posets on n elements."""
    if n > CENSUS_BOUND:
        raise OracleBoundError(f"the census is bounded at {CENSUS_BOUND} elements")
    if n == 0:
        return (Poset.empty(),)
    return tuple(
        Poset.disjoint_union(parts)
        for parts in _component_multisets(n, n, None)
    )


def census(n_max: int) -> list[int]:
    """Exact counts of V-posets of sizes 1..n_max by explicit construction."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > CENSUS_BOUND:
        raise OracleBoundError(f"the census is bounded at {CENSUS_BOUND} elements")
    return [len(all_vposets(k)) for k in range(1, n_max + 1)]


# ----------------------------------------------------------------------
# asymptotics

@dataclass(frozen=True)
class AsymptoticResult:
    rho: float
    rho_inv: float
    constant: float | None
    truncation_order: int
    bracket_width: float


@lru_cache(maxsize=None)
def _w_floats(order: int) -> tuple[float, ...]:
    return tuple(float(c) for c in w_series(order).coeffs)


def w_value(x: float, order: int) -> float:
    """The truncated series x(2-x)V(x) evaluated at x, in double precision."""
    acc = 0.0
    for c in reversed(_w_floats(order)):
        acc = acc * x + c
    return acc


def _w_deriv_value(x: float, order: int) -> float:
    coeffs = _w_floats(order)
    acc = 0.0
    for k in range(len(coeffs) - 1, 0, -1):
        acc = acc * x + k * coeffs[k]
    return acc


def r_value(x: float, order: int) -> float:
    """R(x) = x(1-x)(2-x) * exp(sum of W(x**m)/m over m >= 2)."""
    inner = 0.0
    m = 2
    while True:
        t = x**m
        if t < _INNER_CUTOFF:
            break
        inner += w_value(t, order) / m
        m += 1
    return x * (1.0 - x) * (2.0 - x) * math.exp(inner)


def solve_rho(order: int = 100, tol: float = 1e-12) -> AsymptoticResult:
    """Bisect R(x) = 1/e on [0.2, 0.35]; the result lacks the prefactor."""
    if order < 60:
        raise ValueError("truncation order must be at least 60")
    if tol < 1e-12:
        raise ValueError("tolerances below 1e-12 are not supported")
    lo, hi = 0.2, 0.35
    target = 1.0 / math.e
    f_lo = r_value(lo, order) - target
    f_hi = r_value(hi, order) - target
    if not (f_lo < 0.0 < f_hi):
        raise RuntimeError(
            "no sign change across the bracket [0.2, 0.35]; "
            "the truncation order is too low"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if r_value(mid, order) - target < 0.0:
            lo = mid
        else:
            hi = mid
    rho = 0.5 * (lo + hi)
    return AsymptoticResult(
        rho=rho,
        rho_inv=1.0 / rho,
        constant=None,
        truncation_order=order,
        bracket_width=hi - lo,
    )


def asymptotic_constant(order: int = 100, tol: float = 1e-12) -> AsymptoticResult:
    """Complete the asymptotic data with the multiplicative prefactor.

    R'(rho) comes from the logarithmic derivative of R rather than finite
    differences:  R'/R = 1/x - 1/(1-x) - 1/(2-x) + sum of x**(m-1) W'(x**m).
    """
    base = solve_rho(order, tol)
    rho = base.rho
    r = r_value(rho, order)
    inner = 0.0
    m = 2
    while True:
        t = rho**m
        if t < _INNER_CUTOFF:
            break
        inner += rho ** (m - 1) * _w_deriv_value(t, order)
        m += 1
    r_prime = r * (1.0 / rho - 1.0 / (1.0 - rho) - 1.0 / (2.0 - rho) + inner)
    constant = math.sqrt(math.e * r_prime) / (math.sqrt(2.0 * math.pi * rho) * (2.0 - rho))
    return replace(base, constant=constant)


def asymptotic_estimate(n: int, result: AsymptoticResult) -> float:
    """The leading-order estimate constant * n**-1.5 * rho**-n.

    Returns +inf when rho**-n overflows double precision.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if result.constant is None:
        raise ValueError("result has no prefactor; use asymptotic_constant")
    try:
        return result.constant * n**-1.5 * result.rho ** (-n)
    except OverflowError:
        return math.inf
