"""The square structure of reduced trace polynomials.

Every reduced polynomial observed factors as sign * z^k * R(z)^2; the
square roots of the values at -1 along the Fibonacci geodesic grow into
enormous exact integers; and each mediant satisfies a corrected
plus-or-minus triangle relation between the R factors.  All of this is
experimental reporting, not a proved statement.
"""

import pathlib

from fareyslice import Slope, conjecture, serialize

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

print("square decompositions of small reduced polynomials:")
for text in ("0/1", "1/2", "1/3", "2/3", "3/5", "5/8"):
    d = conjecture.decompose_square(Slope.parse(text))
    print(f"  {text:>4}: sign {d.sign:+d}, z^{d.k}, factor {d.factor.coeffs}")

print("\nsquare roots of |reduced value at -1| on the Fibonacci geodesic:")
for q, value in enumerate(conjecture.table_of_squares(16), start=1):
    print(f"  q={q:>2}: {value}")

rules = conjecture.bad_points(20)
counts = {}
for rule in rules.values():
    counts[rule] = counts.get(rule, 0) + 1
print(f"\ntriangle-rule classification up to denominator 20: {counts}")

colors = {"plus": "steelblue", "minus": "crimson", "both": "purple",
          "neither": "black"}
points = [(s.p / s.q, 1.0 / s.q) for s in rules]
svg = OUT / "rule_map.svg"
svg.write_text(serialize.scatter_svg(points,
                                     [colors[r] for r in rules.values()],
                                     radius=0.008))
print(f"wrote {svg.name} (minus-rule points in red)")

report = conjecture.epsilon_k_check(20)
print("\nsign/parity bookkeeping across all triangles:")
print("  " + report.summary().replace("\n", "\n  "))
