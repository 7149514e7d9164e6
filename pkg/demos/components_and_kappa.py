"""Split a multi-block partition into single-block pieces and add up generators."""

from hookcells import parse_partition
from hookcells.components import decompose, elementary_partition_factors
from hookcells.kappa import beta_profile, kappa, kappa_by_components, kappa_by_factors

P = parse_partition("15,12^4,11,7,6^2,5,3^4")
print("P =", P, "T =", P.T.values)

for c in decompose(P):  # one single-block partition per degree
    print(c.degree, c.T.values, c.P, "kappa", kappa(c.P))

print("kappa(P) =", kappa(P), "through components:", kappa_by_components(P))
print("generators by degree:", {i: n for i, n in beta_profile(P).as_dict().items() if n})

Q = parse_partition("10^2,4,3^2,2^5")  # not elementary: splits along a plateau
for F in elementary_partition_factors(Q):
    print("factor", F, "T =", F.T.values, "kappa", kappa(F))
print("kappa(Q) =", kappa(Q), "through factors:", kappa_by_factors(Q))
