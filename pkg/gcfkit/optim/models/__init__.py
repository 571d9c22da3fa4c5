from .opt_state import AdamConfig, OptState

__all__ = ['AdamConfig', 'OptState']
