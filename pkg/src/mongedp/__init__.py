"""Exact solvers for layered dynamic programs with Monge transition costs.

The engine finds a shortest route through a layered DAG whose level-d
transition costs satisfy the Monge condition, in O(n * D) time and
O(n + D) space, and reconstructs a full optimal solution by divide and
conquer over levels.  On top of it sit three classic reductions:
length-limited prefix codes (r-ary, with canonical codeword output),
service-center placement on a line, and broadcast paging schedules.

Everything is exact: costs are ints or fractions, with float('inf') as
the single infeasibility sentinel.
"""

from .applications import (
    DMedianSolution,
    LineInstance,
    PagingInstance,
    PagingSolution,
    brute_force_partition,
    dmedian_cost,
    dmedian_model,
    paging_cost,
    paging_model,
    solve_dmedian,
    solve_paging,
)
from .dp_solver import (
    DPRow,
    DPSolution,
    GridVertex,
    SupportGapError,
    TableSizeError,
    fill_table_value,
    mid,
    naive_solve,
    naive_table,
    path,
    solve_construction,
)
from .instrument import AllocationMeter, measuring
from .llhc import (
    CodeTree,
    InfeasibleDepthError,
    LLHCInstance,
    LLHCSolution,
    NonTreeSequenceError,
    PrefixCode,
    assign_codewords,
    brute_force_llhc,
    cost_of_sequence,
    huffman_baseline,
    llhc_cost,
    llhc_model,
    normalize_rary,
    sequence_to_tree,
    solve_llhc,
    validate_sequence,
)
from .monge_core import (
    INF,
    Cost,
    ImplicitMatrix,
    MongeCostModel,
    extended_add,
    is_finite,
    is_monge,
    is_monge_cost_model,
)
from .smawk import RowMinimaResult, brute_force_row_minima, row_minima

__version__ = "0.1.0"

__all__ = [
    "AllocationMeter",
    "CodeTree",
    "Cost",
    "DMedianSolution",
    "DPRow",
    "DPSolution",
    "GridVertex",
    "INF",
    "ImplicitMatrix",
    "InfeasibleDepthError",
    "LLHCInstance",
    "LLHCSolution",
    "LineInstance",
    "MongeCostModel",
    "NonTreeSequenceError",
    "PagingInstance",
    "PagingSolution",
    "PrefixCode",
    "RowMinimaResult",
    "SupportGapError",
    "TableSizeError",
    "assign_codewords",
    "brute_force_llhc",
    "brute_force_partition",
    "brute_force_row_minima",
    "cost_of_sequence",
    "dmedian_cost",
    "dmedian_model",
    "extended_add",
    "fill_table_value",
    "huffman_baseline",
    "is_finite",
    "is_monge",
    "is_monge_cost_model",
    "llhc_cost",
    "llhc_model",
    "measuring",
    "mid",
    "naive_solve",
    "naive_table",
    "normalize_rary",
    "paging_cost",
    "paging_model",
    "path",
    "row_minima",
    "sequence_to_tree",
    "solve_construction",
    "solve_dmedian",
    "solve_llhc",
    "solve_paging",
    "validate_sequence",
]
