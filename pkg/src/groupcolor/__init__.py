"""Counting proper colorings of multigraphs over finite abelian groups.

The central object is a polynomial in the group order k attached to a
multigraph together with a 0/1 value on each cycle. Four independent
evaluation strategies (spanning-subgraph expansion, deletion-contraction,
broken-cycle expansion, bond expansion) are implemented and cross-checked
against exhaustive coloring and tension counts.
"""

from __future__ import annotations

from .assigning import (
    Assigning,
    check_admissible,
    delta,
    from_values,
    induced_assigning,
    is_compatible,
    parse_assigning,
    format_assigning,
    restrict_contract,
    restrict_delete,
    zero_assigning,
)
from .cycles import (
    Cycle,
    LinearOrder,
    broken_cycles,
    compatible_sets,
    enumerate_bonds,
    enumerate_cycles,
    signed_incidence,
)
from .errors import AdmissibilityWarning, BudgetError, ContractError, InputError
from .group import (
    AbelianGroup,
    EdgeFunction,
    coboundary,
    contract_edge_function,
    count_colorings,
    count_tensions,
    cycle_sum,
    format_edge_function,
    parse_edge_function,
)
from .kernels import BACKEND
from .multigraph import Edge, MultiGraph, format_graph, parse_graph
from .polynomial import (
    IntPolynomial,
    decompose,
    evaluate,
    poly_broken,
    poly_subgraph,
    tau_bond,
    tau_delcon,
    tau_subgraph,
)
from .verify import CheckResult, VerifyReport, chromatic_polynomial, verify_instance

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AdmissibilityWarning",
    "Assigning",
    "BACKEND",
    "BudgetError",
    "CheckResult",
    "ContractError",
    "Cycle",
    "Edge",
    "EdgeFunction",
    "InputError",
    "IntPolynomial",
    "LinearOrder",
    "MultiGraph",
    "VerifyReport",
    "broken_cycles",
    "check_admissible",
    "chromatic_polynomial",
    "coboundary",
    "compatible_sets",
    "contract_edge_function",
    "count_colorings",
    "count_tensions",
    "cycle_sum",
    "decompose",
    "delta",
    "enumerate_bonds",
    "enumerate_cycles",
    "evaluate",
    "format_assigning",
    "format_edge_function",
    "format_graph",
    "from_values",
    "induced_assigning",
    "is_compatible",
    "parse_assigning",
    "parse_edge_function",
    "parse_graph",
    "poly_broken",
    "poly_subgraph",
    "restrict_contract",
    "restrict_delete",
    "signed_incidence",
    "tau_bond",
    "tau_delcon",
    "tau_subgraph",
    "verify_instance",
    "zero_assigning",
]
