"""Property campaigns and reproduction of the published tables."""
