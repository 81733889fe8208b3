"""multimatrix tests."""
