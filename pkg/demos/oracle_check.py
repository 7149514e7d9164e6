"""Check the closed formula against actual ideals over small prime fields."""

from hookcells import Partition
from hookcells.algebra_oracle import cell_points, hilbert_function, oracle_kappa
from hookcells.kappa import kappa

# (4,1): tails xy + a x^2 and y^2 + b x^2 work only when b = -a^2
p = 7
pts = list(cell_points(Partition.of(4, 1), p))
print([pt.tails for pt in pts])  # p points on a parabola

g = pts[3].generators
print("Hilbert function:", hilbert_function(g, 5, p))

for parts in [(5, 3, 1), (3, 3, 1, 1, 1), (4, 3, 2, 2, 1), (2, 2)]:
    P = Partition(parts)
    res = oracle_kappa(P)  # minimum over the cell, stable over two primes
    print(P, "oracle", res.min_total, res.min_profile, "primes", res.primes,
          "formula", kappa(P))
