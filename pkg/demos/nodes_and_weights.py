"""Census of the node sets and their quadrature weights.

Prints the cardinalities against their closed forms, the boundary
stratum counts, and the exact rational weight sums for a few degrees.
"""

from fractions import Fraction
from math import comb

from fcctrig import (
    generate_Hn,
    generate_Hn_circ,
    generate_Hn_star,
    generate_Lambda_n,
    lambda_nodes,
    stratum_counts,
    weight_c,
    weight_lambda,
)

print("degree |H_n| 4n^3   |H_n*| (n+1)^4-n^4   |H_n^o| n^4-(n-1)^4   |Lambda_n| C(n+3,3)")
for n in range(1, 7):
    print(
        f"{n:6d} {len(generate_Hn(n)):5d} {4 * n**3:4d}"
        f"   {len(generate_Hn_star(n)):6d} {(n + 1) ** 4 - n**4:11d}"
        f"   {len(generate_Hn_circ(n)):7d} {n**4 - (n - 1) ** 4:11d}"
        f"   {len(lambda_nodes(n)):10d} {comb(n + 3, 3):8d}"
    )

n = 3
print(f"\nboundary strata of the symmetric set, degree {n}:")
for lab, cnt in sorted(stratum_counts(n).items()):
    name = "interior" if lab == (0, 0) else f"|I|={lab[0]}, |J|={lab[1]}"
    print(f"  {name:16s} {cnt:4d} nodes")

print("\nweight sums (must equal 4n^3 exactly):")
for n in range(1, 7):
    csum = sum(weight_c(k, n) for k in generate_Hn_star(n))
    lsum = sum(weight_lambda(k, n) for k in lambda_nodes(n))
    assert csum == Fraction(4 * n**3) and lsum == 4 * n**3
    print(f"  n={n}: sum c = {csum}, sum lambda = {lsum}")

print("\ntetrahedral strata at degree 4:")
census = {}
for _, lab in generate_Lambda_n(4):
    census[lab] = census.get(lab, 0) + 1
for lab in ("interior", "face", "edge1", "edge2", "vertex"):
    print(f"  {lab:9s} {census.get(lab, 0):3d} nodes")
