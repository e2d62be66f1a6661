"""Exact symmetric polynomials: monomial/power-sum conversion via a generalized Newton-Girard identity."""

from .newton import (
    TheoremTerm,
    Verdict,
    e_to_p,
    formal_identity_sides,
    m_to_p,
    theorem_terms,
    verify_formal,
    verify_theorem,
)
from .oracle import SparsePoly, evaluate, expand_m, expand_p, poly_mul, specialize
from .partitions import (
    EMPTY,
    Partition,
    enumerate_weak_compositions,
    format_partition,
    length,
    multinomial,
    parse_partition,
    partition_from_list,
    partitions_up_to_weight,
)
from .ring import (
    MExpansion,
    PExpansion,
    mexp_add,
    mexp_mul_power,
    mexp_scale,
    pieri_literal_four_sums,
    pieri_power_times_monomial,
)

__version__ = "0.1.0"
