"""Dense univariate polynomials with exact coefficients.

Coefficients are Python ints or Fractions, ascending degree, no trailing
zeros (the zero polynomial has an empty tuple).  Includes the shared text
format, expansion in powers of a monic polynomial, reduction mod p, and
an irreducibility test over the p-element field.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .primes import INFINITY, _require_prime, sieve_primes, vp_rat


def _canon(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    if isinstance(c, bool):
        return int(c)
    if not isinstance(c, (int, Fraction)):
        raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")
    return c


class Poly:
    """Immutable dense polynomial; coeffs[i] is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def term(cls, c, e: int) -> "Poly":
        return cls((0,) * e + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, e: int):
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Long division; exact over the rationals (monic divisors stay integral)."""
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        dlead = other.lead
        dn = other.degree
        r = list(self.coeffs)
        qc = [0] * max(0, len(r) - dn)
        while len(r) - 1 >= dn:
            c = r[-1] if dlead == 1 else _canon(Fraction(r[-1]) / Fraction(dlead))
            shift = len(r) - 1 - dn
            qc[shift] = c
            for i, b in enumerate(other.coeffs):
                r[shift + i] -= c * b
            while r and r[-1] == 0:
                r.pop()
        return Poly(qc), Poly(r)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def map_coeffs(self, fn) -> "Poly":
        return Poly(fn(c) for c in self.coeffs)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


X = Poly((0, 1))


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to Poly")


# ---------------------------------------------------------------------------
# text format: descending terms like "3x^2 - x + 17"; input order is free and
# the printed form parses back bit-exactly.

_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(x(?:\^(\d+))?)?")


def format_poly(f: Poly) -> str:
    if f.is_zero:
        return "0"
    parts = []
    for e in range(f.degree, -1, -1):
        c = f[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        body = "" if (mag == 1 and e > 0) else str(mag)
        if e == 1:
            body += "x"
        elif e > 1:
            body += f"x^{e}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def parse_poly(text: str) -> Poly:
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, num, xpart, exp = m.groups()
        if num is None and xpart is None:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        e = 0
        if xpart is not None:
            e = int(exp) if exp is not None else 1
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
        pos = m.end()
    top = max(coeffs)
    return Poly(coeffs.get(i, 0) for i in range(top + 1))


# ---------------------------------------------------------------------------
# content / valuations

def content(f: Poly) -> int:
    """Positive gcd of the integer coefficients; rejects the zero polynomial."""
    if f.is_zero:
        raise ValueError("content of the zero polynomial is undefined")
    if not f.is_integral:
        raise ValueError("content requires integer coefficients")
    return math.gcd(*f.coeffs) if len(f.coeffs) > 1 else abs(f.coeffs[0])


def primitive_part(f: Poly) -> Poly:
    c = content(f)
    return f.map_coeffs(lambda a: a // c)


def gauss_valuation(p: int, f: Poly) -> int | float:
    """min over coefficients of the p-adic valuation; inf for the zero poly."""
    if f.is_zero:
        return INFINITY
    return min(vp_rat(p, c) for c in f.coeffs if c != 0)


# ---------------------------------------------------------------------------
# expansion in powers of a monic polynomial

@dataclass(frozen=True)
class PhiExpansion:
    """f = sum parts[i] * phi**i with deg parts[i] < deg phi, parts[-1] != 0."""

    phi: Poly
    parts: tuple[Poly, ...]

    @property
    def n(self) -> int:
        return len(self.parts) - 1

    def reassemble(self) -> Poly:
        acc = Poly()
        for part in reversed(self.parts):
            acc = acc * self.phi + part
        return acc


def phi_expand(f: Poly, phi: Poly) -> PhiExpansion:
    if not (phi.is_monic and phi.degree >= 1):
        raise ValueError("expansion base must be monic of degree >= 1")
    parts = []
    rest = f
    while not rest.is_zero:
        rest, rem = divmod(rest, phi)
        parts.append(rem)
    while parts and parts[-1].is_zero:
        parts.pop()
    return PhiExpansion(phi=phi, parts=tuple(parts))


# ---------------------------------------------------------------------------
# arithmetic over the p-element field (dense int lists, ascending)

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_from_poly(f: Poly, p: int) -> list[int]:
    return _fp_trim([int(c) % p for c in f.coeffs])


def _fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, p)
    r = a[:]
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(r) >= len(b):
        c = r[-1] * inv % p
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        _fp_trim(r)
    return q, r


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _fp_powmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _fp_divmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, p), mod, p)[1]
        base = _fp_divmod(_fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def reduce_mod_p(f: Poly, p: int) -> Poly:
    """Coefficientwise reduction into [0, p), canonical form."""
    _require_prime(p)
    if not f.is_integral:
        raise ValueError("reduction requires integer coefficients")
    return Poly(_fp_from_poly(f, p))


@lru_cache(maxsize=1 << 14)
def is_irreducible_mod_p(phi: Poly, p: int) -> bool:
    """Irreducibility of a monic polynomial over the p-element field.

    Uses the standard criterion: x**(p**d) == x mod (phi, p) for d = deg phi,
    together with gcd(x**(p**(d//q)) - x, phi) == 1 for each prime q | d.
    """
    _require_prime(p)
    if not phi.is_monic:
        raise ValueError("irreducibility test requires a monic polynomial")
    d = phi.degree
    if d < 1:
        raise ValueError("degree must be at least 1")
    if d == 1:
        return True
    mod = _fp_from_poly(phi, p)
    x = [0, 1]
    stages = {0: x[:]}
    w = x[:]
    for e in range(1, d + 1):
        w = _fp_powmod(w, p, mod, p)
        stages[e] = w[:]
    target = _fp_divmod(x, mod, p)[1]
    if stages[d] != target:
        return False
    for q in _small_prime_divisors(d):
        diff = _fp_trim([(a - b) % p for a, b in _zip_pad(stages[d // q], x)])
        if _fp_gcd(mod[:], diff, p) != [1]:
            return False
    return True


def _zip_pad(a: list[int], b: list[int]):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)


def _small_prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def check_phi(phi: Poly, bound: int) -> bool:
    """True iff phi is irreducible modulo every prime <= bound."""
    return all(is_irreducible_mod_p(phi, p) for p in sieve_primes(bound))


def _first_irreducible_mod_p(d: int, p: int) -> list[int]:
    """First monic irreducible of degree d over F_p, lower coefficients
    enumerated as base-p digits of 0, 1, 2, ... (constant digit first)."""
    for n in range(p**d):
        lower = []
        rest = n
        for _ in range(d):
            rest, digit = divmod(rest, p)
            lower.append(digit)
        if is_irreducible_mod_p(Poly(lower + [1]), p):
            return lower
    raise AssertionError("irreducibles of every degree exist over F_p")  # pragma: no cover


def construct_phi(d: int, bound: int) -> Poly:
    """A monic degree-d polynomial irreducible mod every prime <= bound.

    Picks one monic irreducible per prime and glues the coefficients with
    the Chinese Remainder Theorem (balanced representatives).  Degree 1 is
    rejected when primes are in play: every linear polynomial is trivially
    irreducible and the factor-degree machinery degenerates there.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    primes = sieve_primes(bound)
    if d == 1:
        if primes:
            raise ValueError("degree 1 with a nontrivial prime bound is rejected")
        return Poly((0, 1))
    if not primes:
        return Poly((0,) * d + (1,))
    modulus = math.prod(primes)
    lowers = {p: _first_irreducible_mod_p(d, p) for p in primes}
    coeffs = []
    for i in range(d):
        residue = 0
        for p in primes:
            mp = modulus // p
            residue += lowers[p][i] * mp * pow(mp, -1, p)
        residue %= modulus
        if residue > modulus // 2:
            residue -= modulus
        coeffs.append(residue)
    phi = Poly(coeffs + [1])
    if not check_phi(phi, bound):  # pragma: no cover
        raise AssertionError("CRT glue must preserve per-prime irreducibility")
    return phi
