"""Transposition factorizations of the n-cycle, convex caterpillars and
their descent generating functions."""

from ._core import (
    chain_descent,
    chain_of_factorization,
    descent_distribution,
    descent_set,
    enumerate_factorizations,
    enumerate_linearly_ordered,
    expand_in_schur,
    expand_linear,
    geometric_tree,
    gy_conditions,
    gy_relation,
    hook_identity_rhs,
    is_convex_caterpillar,
    is_cycle_factorization,
    is_linearly_ordered,
    main_index,
    noncrossing_partitions,
    phi,
    qsym_of_descents,
    reconstruct,
    run_cli,
)

__all__ = [
    "chain_descent",
    "chain_of_factorization",
    "descent_distribution",
    "descent_set",
    "enumerate_factorizations",
    "enumerate_linearly_ordered",
    "expand_in_schur",
    "expand_linear",
    "geometric_tree",
    "gy_conditions",
    "gy_relation",
    "hook_identity_rhs",
    "is_convex_caterpillar",
    "is_cycle_factorization",
    "is_linearly_ordered",
    "main_index",
    "noncrossing_partitions",
    "phi",
    "qsym_of_descents",
    "reconstruct",
    "run_cli",
]
