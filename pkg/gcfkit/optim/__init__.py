"""First-order optimization shared by the auction trainer and the dual solver."""
