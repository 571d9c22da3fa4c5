"""Environment-specific settings modules."""
