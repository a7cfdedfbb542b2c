"""Primality testing and streaming prime generation.

``is_prime`` is a Miller-Rabin test: deterministic with a fixed base set
below 3.3e24, 64 pseudo-random rounds (seeded by the input, so still
reproducible) above.  Primes are enumerated by a segmented sieve of
Eratosthenes with 2**20-wide segments.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import isqrt
from typing import Iterator

# Verified deterministic witness set for n < 3_317_044_064_679_887_385_961_981.
_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SEGMENT = 1 << 20


def _miller_rabin_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _DETERMINISTIC_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _DETERMINISTIC_BOUND:
        bases: tuple[int, ...] | list[int] = _DETERMINISTIC_BASES
    else:
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(64)]
    return all(_miller_rabin_round(n, d, s, a) for a in bases)


def _small_sieve(limit: int) -> list[int]:
    """All primes <= limit by a plain sieve (limit is at most sqrt of a bound)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(2, limit + 1) if flags[i]]


def primes_in_range(lo: int, hi: int) -> Iterator[int]:
    """Yield primes p with lo <= p < hi, in increasing order."""
    if hi <= 2 or hi <= lo:
        return
    lo = max(lo, 2)
    base = _small_sieve(isqrt(hi - 1))
    for p in base:
        if lo <= p < hi:
            yield p
    start = max(lo, base[-1] + 1 if base else 2)
    while start < hi:
        stop = min(start + _SEGMENT, hi)
        flags = bytearray([1]) * (stop - start)
        for p in base:
            first = max(p * p, (start + p - 1) // p * p)
            if first < stop:
                flags[first - start :: p] = bytearray(len(range(first, stop, p)))
        for i, ok in enumerate(flags):
            if ok:
                yield start + i
        start = stop


def primes_up_to(n: int) -> Iterator[int]:
    """Yield primes p <= n."""
    return primes_in_range(2, n + 1)
