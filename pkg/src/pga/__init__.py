"""Automorphism groups of power graphs of finite groups.

The power graph of a finite group has the nontrivial elements as vertices,
two of them adjacent when one is a power of the other. This package computes
the full automorphism group of that graph as a structural expression
(symmetric groups, direct products, wreath products) with exact integer
order, and double-checks every structural claim against a self-contained
brute-force search oracle for vertex-weighted graphs.
"""

from .engine import (
    AutReport,
    ClassSummary,
    Verification,
    analyze,
    aut_abelian,
    aut_cyclic_formula,
    aut_full,
    aut_homocyclic_formula,
    aut_nilpotent,
    aut_prime_power_cyclic,
    quotient_aut,
    verify,
)
from .errors import InternalCheckError, SpecError
from .expr import (
    GroupExpr,
    Opaque,
    Product,
    Sym,
    Trivial,
    Wreath,
    expr_normalize,
    expr_order,
    parse_expr,
    render_expr,
)
from .groups import (
    DEFAULT_MAX_ORDER,
    FiniteGroup,
    GroupSpec,
    direct_product,
    divisors,
    factorize,
    is_prime_power,
    parse_group_spec,
    realize,
    render_group_spec,
    spec_order,
    totient,
)
from .oracle import (
    CapExceeded,
    OracleCaps,
    WeightedGraph,
    are_isomorphic,
    connected_components,
    count_automorphisms,
    enumerate_automorphisms,
    find_isomorphism,
    vertex_orbits,
)
from .powergraph import PowerGraph, build_power_graph
from .quotient import (
    BOTH,
    CYCLIC_INTERVAL,
    GENERATOR_CLASS,
    MenClassRecord,
    MenPartition,
    QuotientGraph,
    build_quotient,
    classify_men_class,
    men_partition,
    merge_equal_closed_neighborhoods,
    reconstruct_order,
)

__all__ = [
    "AutReport",
    "BOTH",
    "CYCLIC_INTERVAL",
    "CapExceeded",
    "ClassSummary",
    "DEFAULT_MAX_ORDER",
    "FiniteGroup",
    "GENERATOR_CLASS",
    "GroupExpr",
    "GroupSpec",
    "InternalCheckError",
    "MenClassRecord",
    "MenPartition",
    "Opaque",
    "OracleCaps",
    "PowerGraph",
    "Product",
    "QuotientGraph",
    "SpecError",
    "Sym",
    "Trivial",
    "Verification",
    "WeightedGraph",
    "Wreath",
    "analyze",
    "are_isomorphic",
    "aut_abelian",
    "aut_cyclic_formula",
    "aut_full",
    "aut_homocyclic_formula",
    "aut_nilpotent",
    "aut_prime_power_cyclic",
    "build_power_graph",
    "build_quotient",
    "classify_men_class",
    "connected_components",
    "count_automorphisms",
    "direct_product",
    "divisors",
    "enumerate_automorphisms",
    "expr_normalize",
    "expr_order",
    "factorize",
    "find_isomorphism",
    "is_prime_power",
    "men_partition",
    "merge_equal_closed_neighborhoods",
    "parse_expr",
    "parse_group_spec",
    "quotient_aut",
    "realize",
    "reconstruct_order",
    "render_expr",
    "render_group_spec",
    "spec_order",
    "totient",
    "verify",
    "vertex_orbits",
]
