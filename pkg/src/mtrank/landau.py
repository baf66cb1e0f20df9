"""Landau's function g(n), the shifted variant g1(n) and the alpha(n) term.

Both functions are maxima of an LCM under an additive budget.  Only
pairwise-coprime prime powers need to be considered (splitting a composite
part into coprime factors never costs more, and repeating a part never raises
the LCM), so each is a grouped knapsack over primes where the item p**k
costs p**k (for g) or p**k - 1 (for g1).  Values are compared as exact ints.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

MASSIAS_CONSTANT = 1.05314


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def _knapsack(max_n: int, shift: int) -> tuple[int, ...]:
    # best[b] = max LCM of coprime prime powers with total cost <= b.
    # Padding with parts 1 (for g) or 2 (for g1) turns "<= b" into "== b".
    best = [1] * (max_n + 1)
    for p in primes_up_to(max_n + shift):
        items = []
        q = p
        while q - shift <= max_n:
            items.append((q - shift, q))
            q *= p
        for budget in range(max_n, 0, -1):
            current = best[budget]
            for cost, value in items:
                if cost > budget:
                    break
                cand = best[budget - cost] * value
                if cand > current:
                    current = cand
            best[budget] = current
    return tuple(best)


@dataclass(frozen=True)
class LandauTable:
    """g(n) and g1(n) for 0 <= n <= max_n."""

    max_n: int
    g_values: tuple[int, ...]
    g1_values: tuple[int, ...]

    def g(self, n: int) -> int:
        return self.g_values[n]

    def g1(self, n: int) -> int:
        return self.g1_values[n]


_largest: LandauTable | None = None


def landau_table(max_n: int) -> LandauTable:
    """Return a table covering at least 0..max_n.

    One table is cached and grown geometrically, so sweeps over n cost about
    as much as a single table of the final size.
    """
    global _largest
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    table = _largest
    if table is None or table.max_n < max_n:
        size = max(max_n, 256, 2 * table.max_n if table else 0)
        table = LandauTable(size, _knapsack(size, 0), _knapsack(size, 1))
        _largest = table
    return table


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")


def landau_g(n: int) -> int:
    """Maximum LCM of positive integers summing to n (g(0) = 1)."""
    _check_n(n)
    return landau_table(n).g(n)


def landau_g1(n: int) -> int:
    """Maximum LCM of integers a_i >= 2 with sum(a_i - 1) = n (g1(0) = 1)."""
    _check_n(n)
    return landau_table(n).g1(n)


@dataclass(frozen=True)
class AlphaValue:
    n: int
    alpha: float
    log2_g1: float
    envelope: float


def alpha_envelope(n: int) -> float:
    """Upper envelope 1.05314 * sqrt(f(n)) / ln 2 for alpha(n).

    f(x) = (x + sqrt(2x)) ln(x + sqrt(2x)) / (x ln x) compares the Massias
    bound at the shifted argument n + floor(sqrt(2n)) with sqrt(n ln n).
    """
    if n < 2:
        raise ValueError(f"alpha_envelope needs n >= 2, got {n}")
    return MASSIAS_CONSTANT * math.sqrt(envelope_ratio(n)) / math.log(2)


def envelope_ratio(x: float) -> float:
    """f(x) = ((x + sqrt(2x)) ln(x + sqrt(2x))) / (x ln x), for x > 1."""
    if x <= 1:
        raise ValueError("f is only defined for x > 1")
    y = x + math.sqrt(2 * x)
    return (y * math.log(y)) / (x * math.log(x))


def alpha(n: int) -> AlphaValue:
    """alpha(n) = log2 g1(n) / sqrt(n ln n), from the exact g1(n)."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 2:
        raise ValueError(f"alpha is defined for n >= 2, got {n}")
    log2_g1 = math.log2(landau_g1(n))
    value = log2_g1 / math.sqrt(n * math.log(n))
    return AlphaValue(n, value, log2_g1, alpha_envelope(n))


def sandwich_check(n: int) -> bool:
    """g(n) <= g1(n) <= g(n + floor(sqrt(2n))), in exact integers."""
    if n < 1:
        raise ValueError(f"sandwich_check needs n >= 1, got {n}")
    table = landau_table(n + math.isqrt(2 * n))
    return table.g(n) <= table.g1(n) <= table.g(n + math.isqrt(2 * n))


def massias_check(n: int) -> bool:
    """ln g(n) < 1.05314 * sqrt(n ln n), evaluated in double precision."""
    if n < 2:
        raise ValueError(f"massias_check needs n >= 2, got {n}")
    return math.log(landau_g(n)) < MASSIAS_CONSTANT * math.sqrt(n * math.log(n))


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def brute_force_g(n: int) -> int:
    """g(n) by enumerating every partition of n.  Exponential; for checks only."""
    return max(math.lcm(*p) for p in _partitions(n, n))


def brute_force_g1(n: int) -> int:
    """g1(n) by enumerating every multiset {a_i >= 2} with sum(a_i - 1) = n."""
    return max(math.lcm(*(a + 1 for a in p)) for p in _partitions(n, n))
