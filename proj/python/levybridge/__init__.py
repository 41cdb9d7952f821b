"""levybridge python package."""
