"""Menu mechanisms for a single buyer: training, evaluation and export."""
