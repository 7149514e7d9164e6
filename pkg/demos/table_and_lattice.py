"""Walk through P(T) for T = (1,2,3,4,2): codes, generator counts, the lattice."""

from hookcells import HilbertFunction, enumerate_partitions, hook_code, kappa
from hookcells.cli import run_lattice, run_table
from hookcells.counting import kappa_distribution
from hookcells.hilbert import dim_GT, kappa_T

T = HilbertFunction((1, 2, 3, 4, 2))
Ps = enumerate_partitions(T)
print(len(Ps), "partitions, cell dimension", dim_GT(T), "kappa(T) =", kappa_T(T))

for P in Ps:
    print(P, hook_code(P), kappa(P))  # partition, code, generic generator count

print()
print(run_table(T, "markdown"))  # same rows, sorted by code size

dist = kappa_distribution(T)
print()
print(dist.to_tsv())  # how many partitions have each generator count

with open("lattice.dot", "w") as fh:  # render with: dot -Tpng lattice.dot -o lattice.png
    fh.write(run_lattice(T))
print("\nwrote lattice.dot")
