"""Prime utilities on exact integers: sieves, p-adic valuations, factoring.

Everything is deterministic.  Primality uses Miller-Rabin with a witness
set that is provably sufficient below 3.3e24 and a fixed extended witness
schedule above.  The valuation of 0 is ``math.inf``, which orders above
every finite valuation; callers that build polygons must treat such points
as absent.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

INFINITY = math.inf

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981


def sieve_primes(bound: int) -> list[int]:
    """All primes <= bound, ascending.  Empty for bound < 2."""
    if bound < 2:
        return []
    flags = bytearray(b"\x01") * (bound + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if flags[p]:
            start = p * p
            flags[start::p] = b"\x00" * len(range(start, bound + 1, p))
    return [i for i in range(2, bound + 1) if flags[i]]


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    witnesses = _MR_WITNESSES
    if n >= _MR_PROVEN_BOUND:
        # extended fixed schedule; composite error probability < 4**-20
        witnesses = _MR_WITNESSES + tuple(range(41, 200, 2))
    for a in witnesses:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def vp_int(p: int, n: int) -> int | float:
    """Largest e with p**e dividing n (sign ignored); inf for n == 0."""
    _require_prime(p)
    if n == 0:
        return INFINITY
    n = abs(n)
    e = 0
    while True:
        q, r = divmod(n, p)
        if r:
            return e
        n = q
        e += 1


def vp_rat(p: int, q: Fraction | int) -> int | float:
    """Valuation of a rational, independent of representation; inf for 0."""
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return vp_int(p, q.numerator) - vp_int(p, q.denominator)


def factorial_valuation(p: int, n: int) -> int:
    """v_p(n!) by Legendre's formula; strictly below n/(p-1) for n >= 1."""
    _require_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    pk = p
    while pk <= n:
        total += n // pk
        pk *= p
    return total


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n, deterministic schedule."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


_TRIAL_LIMIT = 10**6


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| >= 1 as {prime: exponent}."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n and d <= _TRIAL_LIMIT:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            g = _brent_rho(m)
            stack.extend((g, m // g))
    return out


def largest_prime_factor(n: int) -> int:
    """Maximal prime dividing n; requires |n| >= 2."""
    if abs(n) < 2:
        raise ValueError("|n| must be at least 2")
    return max(factorize(n))


def product_lpf(m: int, k: int) -> int:
    """Largest prime factor of (m+1)(m+2)...(m+k); requires m >= k >= 2."""
    if k < 2 or m < k:
        raise ValueError("need m >= k >= 2")
    return max(largest_prime_factor(m + i) for i in range(1, k + 1))


def prime_in_ap(x: int, h: int, u: int, v: int) -> int | None:
    """Some prime p in (x-h, x] with p == u (mod v), or None.

    Searches downward from x, so the largest qualifying prime is returned.
    """
    if v <= 0:
        raise ValueError("v must be positive")
    if math.gcd(u, v) != 1:
        raise ValueError("u and v must be coprime")
    lo = max(x - h, 1)
    for n in range(x, lo, -1):
        if n % v == u % v and is_prime(n):
            return n
    return None
