"""Why the content hypothesis cannot be dropped.

Two-level instances over phi = x^2 - x + 17 whose multipliers violate
exactly one standing hypothesis - an even a_0, or an even leading
multiplier - assemble to polynomials that factor.  Each row is rebuilt
here with the relaxed constructor, the recorded factorization is expanded
and compared exactly, and the violated hypothesis is printed.
"""

from fractions import Fraction

from laguerrecert import Poly, build_instance, format_poly, parse_poly

phi = parse_poly("x^2 - x + 17")

rows = [
    ("a_0 even ", 1, 3, 1, -4, Fraction(3, 2), ((4, 1), (-2, 1))),
    ("a_0 even ", 2, 1, 1, -4, Fraction(1, 2), ((-4, 1), (12, 1))),
    ("a_0 even ", 3, 1, 1, -10, Fraction(1, 2), ((-10, 1), (20, 1))),
    ("a_0 even ", 4, 3, 1, -6, Fraction(3, 2), ((10, 1), (-6, 1))),
    ("lead even", 1, 6, 2, 1, Fraction(3), ((1, 1), (1, 1))),
    ("lead even", 2, 4, 1, -1, Fraction(2), ((3, 1), (-1, 1))),
    ("lead even", 3, 2, 1, -5, Fraction(1), ((10, 1), (-5, 1))),
    ("lead even", 4, 18, 1, -1, Fraction(1), ((-1, 1), (15, 9))),
]

for label, alpha, a2, a1, a0, scale, factors in rows:
    inst = build_instance(2, alpha, a2, [Poly.const(a0), Poly.const(a1)],
                          phi, relaxed=True)
    factored = Poly.const(scale)
    pretty = []
    for c0, c1 in factors:
        factored = factored * (c1 * phi + c0)
        lead = "phi" if c1 == 1 else f"{c1}phi"
        pretty.append(f"({lead}{c0:+d})")
    assert inst.laguerre_polynomial == factored
    print(f"[{label}] alpha={alpha}: a=({a2},{a1},{a0})  "
          f"L = {scale} * {''.join(pretty)}")
    print(f"    expanded: {format_poly(inst.laguerre_polynomial)}")
    print(f"    violated: {inst.violations[0]}")
