from .conjugation import conjugate_on_grid, is_lean, lean_project
from .transform import (
    argmax_index,
    argmax_many,
    gcf_eval,
    gcf_eval_many,
    gcf_eval_smooth,
    gcf_eval_smooth_many,
    gcf_grad,
    gcf_grad_many,
    gcf_grad_smooth,
    gcf_grad_smooth_many,
    inner_values,
    inner_values_many,
    margin,
    margins,
    softmax_weights,
)

__all__ = [
    'conjugate_on_grid', 'is_lean', 'lean_project',
    'argmax_index', 'argmax_many', 'gcf_eval', 'gcf_eval_many', 'gcf_eval_smooth',
    'gcf_eval_smooth_many', 'gcf_grad', 'gcf_grad_many', 'gcf_grad_smooth',
    'gcf_grad_smooth_many', 'inner_values', 'inner_values_many', 'margin', 'margins',
    'softmax_weights',
]
