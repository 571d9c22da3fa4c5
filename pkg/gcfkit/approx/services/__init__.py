from .nets import build_epsilon_net
from .oracles import lp_conjugate_oracle, lp_lean_witnesses, oracle_gradient, oracle_transform
from .suites import SUITE_NAMES, SUITES, run_suite
from .uap import finite_difference_check, grad_convergence_check, relative_error, restrict_to_net, uap_error

__all__ = [
    'build_epsilon_net',
    'lp_conjugate_oracle',
    'lp_lean_witnesses',
    'oracle_gradient',
    'oracle_transform',
    'SUITE_NAMES',
    'SUITES',
    'run_suite',
    'finite_difference_check',
    'grad_convergence_check',
    'relative_error',
    'restrict_to_net',
    'uap_error',
]
