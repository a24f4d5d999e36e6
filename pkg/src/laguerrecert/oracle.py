"""Certificate-free reducibility evidence.

Factor-degree patterns modulo primes narrow the possible factor degrees;
bounded searches (rational roots, low-degree interpolation, base-power
factor candidates) produce explicit witnesses.  Verdicts are sound and
sometimes silent: "irreducible" means the degree sets ruled everything
out, "reducible" always carries an exactly verified factorization, and
anything else is "inconclusive".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian

from .laguerre import LaguerreInstance, build_instance
from .polyring import (Poly, content, phi_expand, primitive_part,
                       _fp_divmod, _fp_from_poly, _fp_gcd, _fp_powmod, _fp_trim)
from .primes import factorize, sieve_primes

_DIVISOR_CAP = 4096
_FACTOR_VALUE_CAP = 10**15
_PAIR_CAP = 60_000
_TRIPLE_CAP = 400_000


@dataclass(frozen=True)
class DegreePattern:
    p: int
    degrees: tuple[int, ...]
    usable: bool


@dataclass(frozen=True)
class DegreeSet:
    possible: frozenset[int]
    low_confidence: bool
    primes_used: tuple[int, ...]


@dataclass(frozen=True)
class FactorWitness:
    """c * g * h reproduces the target exactly; both factors nonconstant."""

    g: Poly
    h: Poly
    c: Fraction


@dataclass(frozen=True)
class Verdict:
    kind: str  # "irreducible" | "reducible" | "inconclusive"
    witness: FactorWitness | None
    degree_set: DegreeSet


def degree_pattern(f: Poly, p: int) -> DegreePattern:
    """Multiset of irreducible-factor degrees of f mod p by distinct-degree
    splitting; unusable when the reduction is not squarefree."""
    if f.lead % p == 0:
        raise ValueError("p must not divide the leading coefficient")
    fp = _fp_from_poly(f, p)
    deriv = _fp_trim([i * c % p for i, c in enumerate(fp)][1:])
    if _fp_gcd(fp[:], deriv, p) != [1]:
        return DegreePattern(p=p, degrees=(), usable=False)
    inv = pow(fp[-1], -1, p)
    rest = [c * inv % p for c in fp]
    degrees = []
    w = [0, 1]
    d = 0
    while len(rest) - 1 > 0:
        d += 1
        if 2 * d > len(rest) - 1:
            degrees.append(len(rest) - 1)
            break
        w = _fp_powmod(w, p, rest, p)
        size = max(len(w), 2)
        diff = _fp_trim([((w[i] if i < len(w) else 0) - (1 if i == 1 else 0)) % p
                         for i in range(size)])
        g = _fp_gcd(rest[:], diff, p)
        if len(g) - 1 > 0:
            degrees.extend([d] * ((len(g) - 1) // d))
            rest, rem = _fp_divmod(rest, g, p)
            assert not rem
            if len(rest) - 1 > 0:
                w = _fp_divmod(w, rest, p)[1]
    return DegreePattern(p=p, degrees=tuple(sorted(degrees)), usable=True)


def _subset_sums(degrees, n: int) -> int:
    mask = 1
    for d in degrees:
        mask |= mask << d
    return mask & ((1 << (n + 1)) - 1)


def possible_degrees(f: Poly, prime_budget: int) -> DegreeSet:
    """Degrees a factor could have, intersected over usable prime patterns.

    Always contains 0 and deg f.  With no usable prime in budget the full
    range is returned, flagged low confidence.
    """
    if f.is_zero or f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    if content(f) != 1:
        raise ValueError("need a primitive polynomial")
    n = f.degree
    minimal = (1 << n) | 1
    mask = (1 << (n + 1)) - 1
    used = []
    for p in sieve_primes(prime_budget):
        if f.lead % p == 0:
            continue
        pat = degree_pattern(f, p)
        if not pat.usable:
            continue
        used.append(p)
        mask &= _subset_sums(pat.degrees, n)
        if mask == minimal:
            break
    if not used:
        return DegreeSet(possible=frozenset(range(n + 1)),
                         low_confidence=True, primes_used=())
    possible = frozenset(d for d in range(n + 1) if mask >> d & 1)
    return DegreeSet(possible=possible, low_confidence=False,
                     primes_used=tuple(used))


def verify_witness(target: Poly, witness: FactorWitness) -> bool:
    """Exact check that c * g * h equals the target."""
    if witness.g.degree < 1 or witness.h.degree < 1:
        return False
    return (witness.g * witness.h) * witness.c == target


def _signed_divisors(n: int) -> list[int] | None:
    """All divisors of |n| with both signs, capped; None when out of reach."""
    if n == 0 or abs(n) > _FACTOR_VALUE_CAP:
        return None
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
        if len(divs) > _DIVISOR_CAP:
            return None
    divs.sort()
    return [s * d for d in divs for s in (1, -1)]


def _clear_denominators(f: Poly) -> tuple[Poly, int]:
    den = 1
    for c in f.coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    return f * den, den


def _witness_from_factor(target: Poly, g: Poly) -> FactorWitness | None:
    """Turn an exact divisor g into a verified witness against target."""
    if g.degree < 1 or g.degree >= target.degree:
        return None
    q, r = divmod(target, g)
    if not r.is_zero or q.degree < 1:
        return None
    gz = primitive_part(g)
    hz, den = _clear_denominators(divmod(target, gz)[0])
    hz = primitive_part(hz)
    lead_ratio = Fraction(target.lead) / (Fraction(gz.lead) * Fraction(hz.lead))
    w = FactorWitness(g=gz, h=hz, c=lead_ratio)
    return w if verify_witness(target, w) else None


def _rational_root_witness(f: Poly) -> FactorWitness | None:
    """Bounded rational-root search: divisors of end coefficients, exact."""
    if f.degree < 2:
        return None
    if f[0] == 0:
        return _witness_from_factor(f, Poly((0, 1)))
    nums = _signed_divisors(f[0])
    dens = _signed_divisors(f.lead)
    if nums is None or dens is None:
        return None
    dens = [d for d in dens if d > 0]
    if len(nums) * len(dens) > _PAIR_CAP:
        return None
    for den in dens:
        for num in nums:
            if math.gcd(num, den) == 1 and f(Fraction(num, den)) == 0:
                w = _witness_from_factor(f, Poly((-num, den)))
                if w is not None:
                    return w
    return None


def _quadratic_factor_witness(f: Poly) -> FactorWitness | None:
    """Degree-2 factor search by 3-point interpolation over divisor grids.

    A factor g satisfies g(x0) | f(x0) at every integer x0, so candidates
    come from divisor triples of f(0), f(1), f(-1); a fourth evaluation at
    x = 2 filters before any division is attempted.
    """
    if f.degree < 4:
        return None
    y0, y1, y2 = f(0), f(1), f(-1)
    if y0 == 0 or y1 == 0 or y2 == 0:
        return _rational_root_witness(f)
    d0s, d1s, d2s = _signed_divisors(y0), _signed_divisors(y1), _signed_divisors(y2)
    if d0s is None or d1s is None or d2s is None:
        return None
    if len(d0s) * len(d1s) * len(d2s) > _TRIPLE_CAP:
        return None
    lead = f.lead
    f2 = f(2)
    for d1 in d1s:
        for d2 in d2s:
            if (d1 + d2) % 2 or (d1 - d2) % 2:
                continue
            half_sum = (d1 + d2) // 2
            b = (d1 - d2) // 2
            for d0 in d0s:
                a = half_sum - d0
                if a <= 0 or lead % a != 0:
                    continue
                g2 = 4 * a + 2 * b + d0
                if g2 == 0 or (f2 != 0 and f2 % g2 != 0):
                    continue
                w = _witness_from_factor(f, Poly((d0, b, a)))
                if w is not None:
                    return w
    return None


def oracle_verdict(f: Poly, prime_budget: int = 200) -> Verdict:
    """Sound three-way verdict on a primitive nonconstant polynomial."""
    degs = possible_degrees(f, prime_budget)
    n = f.degree
    if degs.possible == {0, n}:
        return Verdict(kind="irreducible", witness=None, degree_set=degs)
    witness = None
    if 1 in degs.possible:
        witness = _rational_root_witness(f)
    if witness is None and 2 in degs.possible:
        witness = _quadratic_factor_witness(f)
    if witness is not None:
        assert verify_witness(f, witness)
        return Verdict(kind="reducible", witness=witness, degree_set=degs)
    return Verdict(kind="inconclusive", witness=None, degree_set=degs)


def verdict_to_jsonable(verdict: Verdict) -> dict:
    from .polyring import format_poly

    out = {
        "verdict": verdict.kind,
        "primes_used": list(verdict.degree_set.primes_used),
        "possible_degrees": sorted(verdict.degree_set.possible),
        "low_confidence": verdict.degree_set.low_confidence,
    }
    if verdict.witness is not None:
        out["witness"] = {
            "g": format_poly(verdict.witness.g),
            "h": format_poly(verdict.witness.h),
            "c": str(verdict.witness.c),
        }
    return out


# ---------------------------------------------------------------------------
# searching for reducible instances

def _base_power_candidates(f: Poly, phi: Poly, level: int):
    """Monic candidates phi**level + sum c_i phi**i, constants bounded by the
    expansion norm, filtered by divisibility of evaluations at x = 2."""
    expansion = phi_expand(f, phi)
    if not expansion.parts or expansion.parts[0].is_zero:
        return
    bound = 1
    for part in expansion.parts[:-1]:
        if not part.is_zero:
            bound = max(bound, max(abs(c) for c in part.coeffs))
    bound += 1
    if (2 * bound + 1) ** level > 2_000_000:
        return
    f2 = f(2)
    phi2 = phi(2)
    powers = [phi2**i for i in range(level + 1)]
    for consts in _cartesian(range(-bound, bound + 1), repeat=level):
        g2 = powers[level] + sum(c * powers[i] for i, c in enumerate(consts))
        if g2 == 0 or (f2 != 0 and f2 % g2 != 0):
            continue
        g = phi ** level
        for i, c in enumerate(consts):
            if c:
                g = g + c * phi ** i
        yield g


def _base_power_factor(f: Poly, phi: Poly, max_level: int) -> FactorWitness | None:
    for level in range(1, max_level + 1):
        for g in _base_power_candidates(f, phi, level):
            w = _witness_from_factor(f, g)
            if w is not None:
                return w
    return None


def _rescale_witness(target: Poly, w: FactorWitness) -> FactorWitness:
    scale = Fraction(target.lead) / (Fraction(w.g.lead) * Fraction(w.h.lead))
    return FactorWitness(g=w.g, h=w.h, c=scale)


def search_reducible_witness(m: int, alpha, phi: Poly, coefficient_bound: int,
                             ) -> tuple[LaguerreInstance, FactorWitness] | None:
    """First valid instance (lexicographic multipliers) whose assembled
    polynomial has a rational root or a base-power factor of level at most
    m//2.  None-found is a meaningful result: the search space is exactly
    the stated one.
    """
    if coefficient_bound < 1:
        raise ValueError("coefficient bound must be positive")
    from .laguerre import Alpha

    alpha = Alpha.coerce(alpha)
    B = coefficient_bound
    rng = range(-B, B + 1)
    deg = phi.degree
    small_primes = sieve_primes(alpha.v * m + alpha.u)
    lead_choices = [a for a in rng if a != 0
                    and all(a % p for p in small_primes)]
    for a_m in lead_choices:
        for flat in _cartesian(rng, repeat=m * deg):
            parts = [Poly(flat[j * deg:(j + 1) * deg]) for j in range(m)]
            if parts[0].is_zero:
                continue
            c0 = abs(a_m) * content(parts[0])
            if any(c0 % p == 0 for p in small_primes):
                continue
            inst = build_instance(m, alpha, a_m, parts, phi)
            f = inst.f
            fp = primitive_part(f)
            if fp.lead < 0:
                fp = -fp
            w = _rational_root_witness(fp)
            if w is None:
                w = _base_power_factor(fp, phi, m // 2)
            if w is not None:
                w = _rescale_witness(f, w)
                assert verify_witness(f, w)
                return inst, w
    return None
