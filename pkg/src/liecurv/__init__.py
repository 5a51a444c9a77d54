"""Exact curvature toolkit for left-invariant metrics on Lie groups."""
