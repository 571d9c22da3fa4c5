from .export import grid_rows, write_grid_csv
from .mechanism import (
    allocation,
    choices,
    effective_prices,
    evaluate_mechanism,
    hard_revenue,
    indirect_utility,
    menu_usage,
    payment,
    prune_menu,
)
from .payments import payment_integral_residual, reconstructed_payment
from .training import initial_menu, soft_revenue, train_auction

__all__ = [
    'grid_rows', 'write_grid_csv',
    'allocation', 'choices', 'effective_prices', 'evaluate_mechanism', 'hard_revenue', 'indirect_utility',
    'menu_usage', 'payment', 'prune_menu',
    'payment_integral_residual', 'reconstructed_payment',
    'initial_menu', 'soft_revenue', 'train_auction',
]
