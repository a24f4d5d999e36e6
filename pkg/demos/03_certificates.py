"""Producing and re-verifying an irreducibility certificate.

A certificate is finite, machine-checkable evidence: one prime excludes
factor degrees below deg(phi), and for each k up to m/2 a prime whose
coefficient divisibilities and rightmost polygon slope exclude degrees in
[k deg(phi), (k+1) deg(phi)).  Verification recomputes everything from
scratch, so a tampered certificate is rejected no matter how plausible.
"""

from fractions import Fraction

from laguerrecert import (Certificate, ExclusionWitness, Poly, build_instance,
                          certificate_from_json, certificate_to_json, certify,
                          parse_poly, verify_certificate)

phi = parse_poly("x^2 - x + 17")
inst = build_instance(9, 2, 1, [Poly.const(1)] * 9, phi)
cert = certify(inst)
assert isinstance(cert, Certificate)

print(f"instance: m=9, parameter 2, base {phi}")
print(f"small-degree prime: {cert.small_degree_prime}")
for w in cert.witnesses:
    print(f"  k={w.k}: prime {w.p}, rightmost slope {w.slope} < 1/{w.k}")
print("conclusion:", cert.conclusion)
print()

text = certificate_to_json(cert)
back = certificate_from_json(text)
print("JSON round trip intact:", back == cert)
print("independent verification:", verify_certificate(back, inst))

# sabotage one slope and watch verification refuse it
tampered = Certificate(
    m=cert.m, u=cert.u, v=cert.v, phi=cert.phi,
    small_degree_prime=cert.small_degree_prime,
    witnesses=tuple(ExclusionWitness(k=w.k, p=w.p, slope=Fraction(1, w.k))
                    for w in cert.witnesses))
print("tampered slopes accepted?", verify_certificate(tampered, inst))

# the uncoverable pair (m, parameter) = (2, 2): no witness prime exists
bad = build_instance(2, 2, 1, [Poly.const(1)] * 2, phi, relaxed=True)
report = certify(bad)
print(f"\n(m=2, parameter 2): uncovered k values {report.uncovered} "
      "(no reducibility claim either way)")
