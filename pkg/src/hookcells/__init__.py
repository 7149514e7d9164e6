"""Hook codes and generic generator counts for cells of graded ideals in k[x, y]."""

from .components import decompose, elementary_partition_factors
from .counting import count_partitions, count_special, ci_jordan_count, kappa_distribution, mu, mu_single
from .errors import HookCellsError
from .hilbert import HilbertFunction, dim_GT, kappa_T, parse_hilbert, validate
from .hookcode import HookCode, enumerate_codes, hook_code, partition_from_code
from .kappa import beta_profile, is_special, kappa
from .partitions import Monomial, Partition, enumerate_partitions, parse_partition

__all__ = [
    "HilbertFunction", "HookCellsError", "HookCode", "Monomial", "Partition",
    "beta_profile", "ci_jordan_count", "count_partitions", "count_special", "decompose",
    "dim_GT", "elementary_partition_factors", "enumerate_codes", "enumerate_partitions",
    "hook_code", "is_special", "kappa", "kappa_T", "kappa_distribution", "mu", "mu_single",
    "parse_hilbert", "parse_partition", "partition_from_code", "validate",
]
