"""Small integer helpers: primality, factorization, prime streams."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (intended for small n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return n > 1


def prime_factors(n: int) -> list[int]:
    """Prime factorization of n with multiplicity, in increasing order.

    prime_factors(12) == [2, 2, 3]; prime_factors(1) == [].
    """
    if n < 1:
        raise ValueError(f"prime_factors requires n >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def distinct_prime_factors(n: int) -> list[int]:
    """Distinct primes dividing n, in increasing order."""
    out = []
    for p in prime_factors(n):
        if not out or out[-1] != p:
            out.append(p)
    return out


def first_primes(k: int, odd_only: bool = False) -> list[int]:
    """The first k primes (optionally skipping 2)."""
    out = []
    candidate = 3 if odd_only else 2
    while len(out) < k:
        if is_prime(candidate):
            out.append(candidate)
        candidate += 1 if candidate == 2 else 2
    return out
