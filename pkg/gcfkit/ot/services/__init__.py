from .dual import (
    dual_objective,
    dual_subgradient,
    extract_map,
    feasibility_gap,
    solve_dual,
    transport_assignment,
)
from .exact import enumerate_assignments, random_discrete_instance, solve_transport_lp

__all__ = [
    'dual_objective', 'dual_subgradient', 'extract_map', 'feasibility_gap', 'solve_dual',
    'transport_assignment', 'enumerate_assignments', 'random_discrete_instance', 'solve_transport_lp',
]
