"""Partition statistics for the mod 5 congruence: srank, cranks, 5-cores and q-series checks."""

from .partitions import (
    DomainError,
    Partition,
    ag_crank,
    conjugate,
    dyson_rank,
    enumerate_partitions,
    freq_notation,
    odd_parts,
    parse_partition,
    partition_count,
    residue_counts,
    srank,
    weight,
)
from .stanley import (
    TypeClass,
    bijection1,
    bijection1_inverse,
    bijection2,
    bijection2_inverse,
    classify,
    stcrank,
)
from .cores import (
    CoreQuotient,
    five_core_crank,
    littlewood_compose,
    littlewood_decompose,
    orbit,
    orbit_op,
    phi2,
    phi2_inverse,
    t_core,
    t_cores,
    theta_map,
)
from .qseries import LaurentPoly, Series, assert_equal, build_named_series, cyclic_reduce_check

__version__ = "0.1.0"
