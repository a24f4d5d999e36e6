"""Irreducibility certificates and their independent verification.

A certificate consists of one prime excluding factor degrees below the
base degree, plus one (prime, slope) witness per k in 1..m//2 excluding
factor degrees in [k*deg(phi), (k+1)*deg(phi)).  Witness search is tiered
and deterministic, so equal inputs always yield identical certificates.
Verification recomputes everything from scratch - coefficients, prime
properties, valuations, the polygon, the interval coverage - and trusts
nothing from the producer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .laguerre import HypothesisViolation, LaguerreInstance
from .polygon import PhiExpansion, build_polygon, rightmost_slope
from .polyring import Poly, content, format_poly, gauss_valuation, is_irreducible_mod_p, parse_poly
from .primes import is_prime, sieve_primes

# substitute witness primes for k = 1 when no prime >= u+2 divides m(m+u)
K1_SUBSTITUTES = {
    2: {4: 2, 16: 2, 6: 3},
    3: {3: 3, 6: 3, 9: 3, 24: 3},
    4: {2: 3, 8: 3, 12: 3, 32: 3, 36: 3, 96: 3, 16: 2, 5: 5, 20: 5, 60: 5, 320: 5},
}

# substitute witness primes for k >= 2 when the consecutive-product route
# yields nothing large enough, keyed by (u, k, m).  The (4, 2, 5) entry is 5:
# the once-recorded value 11 divides none of the coefficients, and 5 is the
# unique prime <= m+u passing both witness checks.
K_GE2_SUBSTITUTES = {
    (1, 2, 8): 7,
    (2, 2, 7): 7,
    (2, 3, 8): 7,
    (3, 2, 6): 5,
    (3, 3, 7): 7,
    (3, 2, 7): 7,
    (3, 2, 13): 13,
    (3, 2, 22): 7,
    (3, 2, 78): 7,
    (4, 2, 5): 5,
    (4, 2, 12): 11,
    (4, 2, 21): 7,
    (4, 2, 77): 7,
    (4, 3, 12): 11,
    (4, 3, 46): 23,
}


class NoSmallDegreePrime(Exception):
    """vm+u has no prime divisor usable for the small-degree exclusion."""


@dataclass(frozen=True)
class ExclusionWitness:
    k: int
    p: int
    slope: Fraction
    divisibility_checked: bool = True


@dataclass(frozen=True)
class Certificate:
    m: int
    u: int
    v: int
    phi: Poly
    small_degree_prime: int
    witnesses: tuple[ExclusionWitness, ...]

    @property
    def conclusion(self) -> str:
        return "irreducible-over-Q"


@dataclass(frozen=True)
class FailureReport:
    """Uncovered degree intervals; never a claim of reducibility."""

    m: int
    u: int
    v: int
    small_degree_prime: int | None
    uncovered: tuple[int, ...]
    witnesses: tuple[ExclusionWitness, ...]


def exclude_small_degrees(instance: LaguerreInstance) -> int:
    """A prime excluding nonconstant factors of degree below deg phi.

    The smallest prime divisor of vm+u qualifies: it cannot divide the
    leading multiplier, divides every lower coefficient, and the base is
    irreducible modulo it.  All three facts are re-verified here.
    """
    bound = instance.prime_bound
    if abs(bound) < 2:
        raise NoSmallDegreePrime(f"vm+u = {bound} has no prime divisor")
    p = _smallest_prime_factor(abs(bound))
    if instance.a_m % p == 0:
        raise NoSmallDegreePrime(f"prime {p} divides the leading multiplier")
    if any(bj.numerator % p != 0 or bj.denominator % p == 0
           for bj in instance.b_lower):
        raise NoSmallDegreePrime(f"prime {p} misses a lower coefficient")
    if not is_irreducible_mod_p(instance.phi, p):
        raise NoSmallDegreePrime(f"base polynomial is reducible modulo {p}")
    return p


def _smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def slope_from_vector(vec, k: int) -> tuple[Fraction, bool]:
    """Rightmost slope from the valuation vector, with the dual form.

    slope = max_j (V0 - Vj)/j.  The bound slope < 1/k is equivalent to
    V0 - Vj < j/k for every j; both forms are evaluated and must agree.
    """
    v0 = vec[0]
    slope = max(Fraction(v0 - vec[j], j) for j in range(1, len(vec)))
    below = slope < Fraction(1, k)
    below_dual = all(k * (v0 - vec[j]) < j for j in range(1, len(vec)))
    assert below == below_dual, "slope criterion forms must agree"
    return slope, below


def witness_slope(instance: LaguerreInstance, k: int, p: int) -> Fraction | None:
    """The witness slope when (k, p) satisfies every witness condition, else None."""
    if instance.v % p == 0 or instance.a_m % p == 0:
        return None
    if not instance.a_parts[0].is_zero and content(instance.a_parts[0]) % p == 0:
        return None
    vec = instance.valuation_vector(p)
    if any(vec[j] < 1 for j in range(instance.m - k + 1)):
        return None
    if not is_irreducible_mod_p(instance.phi, p):
        return None
    slope, below = slope_from_vector(vec, k)
    return slope if below else None


def find_prime_for_k(instance: LaguerreInstance, k: int) -> ExclusionWitness | None:
    """Deterministic tiered search for a witness prime at a given k.

    Tiers, each scanned in ascending prime order, each candidate fully
    validated before acceptance:
      1. k >= 2: primes >= k+u+1 dividing (m-k+u+1)...(m+u);
      2. k == 1: primes >= u+2 dividing m(vm+u);
      3. tabulated substitute primes;
      4. every prime <= vm+u coprime to v, a_m and the content of a_0.
    Tiers 1-3 presuppose an integer parameter and are skipped when v > 1.
    """
    m, u, v = instance.m, instance.u, instance.v
    if not 1 <= k <= m // 2:
        raise ValueError("k must lie in [1, m//2]")
    bound = instance.prime_bound
    primes = sieve_primes(bound)
    tiers: list[list[int]] = []
    if v == 1:
        if k >= 2:
            lo, hi = m - k + u + 1, m + u
            tiers.append([q for q in primes
                          if q >= k + u + 1 and (hi // q) * q >= lo])
        else:
            prod = m * bound
            tiers.append([q for q in primes if q >= u + 2 and prod % q == 0])
        sub = (K_GE2_SUBSTITUTES.get((u, k, m)) if k >= 2
               else K1_SUBSTITUTES.get(u, {}).get(m))
        tiers.append([sub] if sub else [])
    tiers.append(primes)
    for tier in tiers:
        for p in tier:
            slope = witness_slope(instance, k, p)
            if slope is not None:
                return ExclusionWitness(k=k, p=p, slope=slope)
    return None


def certify(instance: LaguerreInstance) -> Certificate | FailureReport:
    """Full certificate, or the list of k values left uncovered."""
    if not instance.is_valid:
        raise HypothesisViolation(instance.violations)
    try:
        p0 = exclude_small_degrees(instance)
    except NoSmallDegreePrime:
        p0 = None
    witnesses = []
    uncovered = []
    for k in range(1, instance.m // 2 + 1):
        w = find_prime_for_k(instance, k)
        if w is None:
            uncovered.append(k)
        else:
            witnesses.append(w)
    if p0 is not None and not uncovered:
        return Certificate(m=instance.m, u=instance.u, v=instance.v,
                           phi=instance.phi, small_degree_prime=p0,
                           witnesses=tuple(witnesses))
    return FailureReport(m=instance.m, u=instance.u, v=instance.v,
                         small_degree_prime=p0, uncovered=tuple(uncovered),
                         witnesses=tuple(witnesses))


def lemma_exclusion_check(f: Poly, phi: Poly, p: int, ell: int, k: int,
                          multipliers) -> bool:
    """Degree-interval exclusion hypotheses, checked on an explicit expansion.

    With f monic, not divisible by phi, expanded as sum f_i phi**i, and
    multipliers a_0..a_m, the polynomial sum a_i f_i phi**i has no factor
    with degree in [(ell+1) deg phi, (k+1) deg phi) provided:
      - gauss valuation of f_i is positive for 0 <= i <= m-ell-1,
      - the rightmost slope of the polygon of f at p is below 1/k,
      - deg a_i < deg phi - deg f_i for every i,
      - the content of a_0 is prime to p,
      - the leading coefficient of a_m is prime to p.
    Returns whether all five hold.  Range and shape violations raise.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not (phi.is_monic and phi.degree >= 1):
        raise ValueError("base must be monic of degree >= 1")
    if not is_irreducible_mod_p(phi, p):
        raise ValueError("base must be irreducible modulo p")
    if not f.is_monic:
        raise ValueError("expanded polynomial must be monic")
    from .polyring import phi_expand

    expansion = phi_expand(f, phi)
    parts = expansion.parts
    m = expansion.n
    if not (0 <= ell < k and 2 * k <= m):
        raise ValueError("need 0 <= ell < k <= m/2")
    if parts[0].is_zero:
        raise ValueError("polynomial is divisible by the base")
    multipliers = [mp if isinstance(mp, Poly) else Poly.const(mp) for mp in multipliers]
    if len(multipliers) != m + 1:
        raise ValueError(f"expected {m + 1} multipliers")

    for i in range(m - ell):
        # a vanishing part has infinite valuation and passes vacuously
        if not parts[i].is_zero and gauss_valuation(p, parts[i]) <= 0:
            return False
    if rightmost_slope(build_polygon(expansion, p)) >= Fraction(1, k):
        return False
    for i, mult in enumerate(multipliers):
        fi_deg = parts[i].degree if i < len(parts) and not parts[i].is_zero else 0
        if not mult.is_zero and mult.degree >= phi.degree - fi_deg:
            return False
    a0 = multipliers[0]
    if a0.is_zero or content(a0) % p == 0:
        return False
    if multipliers[m].is_zero or multipliers[m].lead % p == 0:
        return False
    return True


def coverage_complete(m: int, deg_phi: int, ks) -> bool:
    """Every possible smaller-factor degree lies in a certified interval."""
    covered = set(range(1, deg_phi))
    for k in ks:
        covered.update(range(k * deg_phi, (k + 1) * deg_phi))
    return all(d in covered for d in range(1, m * deg_phi // 2 + 1))


def _monic_model_expansion(instance: LaguerreInstance) -> PhiExpansion:
    """Expansion of phi**m + sum (v**m b_j) phi**j, built part by part.

    The parts are constants below deg phi, so by uniqueness this IS the
    expansion of the reassembled polynomial; small cases re-expand and
    compare as a spot check.
    """
    vm = instance.v ** instance.m
    parts = [Poly.const(int(vm * bj)) for bj in instance.b_lower] + [Poly.const(1)]
    expansion = PhiExpansion(phi=instance.phi, parts=tuple(parts))
    if instance.m * instance.phi.degree <= 40:
        from .polyring import phi_expand

        redone = phi_expand(expansion.reassemble(), instance.phi)
        assert redone.parts == expansion.parts
    return expansion


def verify_certificate(cert: Certificate, instance: LaguerreInstance) -> bool:
    """Re-derive every certificate claim from first principles.

    Checks instance consistency and hypotheses, the small-degree prime,
    each witness (primality, coprimality, coefficient divisibility, slope
    bound recomputed through the polygon module), and interval coverage.
    Returns False on any discrepancy; never raises for a bad certificate.
    """
    try:
        if not isinstance(cert, Certificate):
            return False
        if (cert.m, cert.u, cert.v) != (instance.m, instance.u, instance.v):
            return False
        if cert.phi != instance.phi or not instance.is_valid:
            return False
        p0 = cert.small_degree_prime
        if not is_prime(p0) or instance.prime_bound % p0 != 0:
            return False
        if instance.a_m % p0 == 0:
            return False
        if any(bj.numerator % p0 != 0 or bj.denominator % p0 == 0
               for bj in instance.b_lower):
            return False
        if not is_irreducible_mod_p(instance.phi, p0):
            return False

        expansion = _monic_model_expansion(instance)
        seen_ks = []
        for w in cert.witnesses:
            if not (is_prime(w.p) and w.divisibility_checked):
                return False
            if not 1 <= w.k <= instance.m // 2:
                return False
            if instance.v % w.p == 0 or instance.a_m % w.p == 0:
                return False
            if content(instance.a_parts[0]) % w.p == 0:
                return False
            if not is_irreducible_mod_p(instance.phi, w.p):
                return False
            vec = instance.valuation_vector(w.p)
            if any(vec[j] < 1 for j in range(instance.m - w.k + 1)):
                return False
            polygon_slope = rightmost_slope(build_polygon(expansion, w.p))
            if polygon_slope != w.slope or not polygon_slope < Fraction(1, w.k):
                return False
            seen_ks.append(w.k)
        if sorted(seen_ks) != list(range(1, instance.m // 2 + 1)):
            return False
        return coverage_complete(instance.m, instance.phi.degree, seen_ks)
    except (ValueError, ZeroDivisionError, ArithmeticError):
        return False


# ---------------------------------------------------------------------------
# serialization

def certificate_to_jsonable(cert: Certificate) -> dict:
    return {
        "m": cert.m,
        "u": cert.u,
        "v": cert.v,
        "phi": format_poly(cert.phi),
        "small_degree_prime": cert.small_degree_prime,
        "witnesses": [
            {
                "k": w.k,
                "p": w.p,
                "slope": f"{w.slope.numerator}/{w.slope.denominator}",
                "divisibility_range": [0, cert.m - w.k],
            }
            for w in cert.witnesses
        ],
        "conclusion": cert.conclusion,
    }


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_jsonable(cert), indent=2)


def certificate_from_json(text: str) -> Certificate:
    data = json.loads(text)
    witnesses = tuple(
        ExclusionWitness(k=w["k"], p=w["p"],
                         slope=Fraction(w["slope"]),
                         divisibility_checked=w["divisibility_range"] == [0, data["m"] - w["k"]])
        for w in data["witnesses"]
    )
    return Certificate(m=data["m"], u=data["u"], v=data["v"],
                       phi=parse_poly(data["phi"]),
                       small_degree_prime=data["small_degree_prime"],
                       witnesses=witnesses)
