"""Neighborhood-balanced 3-colorings of graphs.

A coloring of the vertices with colors {0, 1, 2} is neighborhood 3-balanced
when every open neighborhood contains each color equally often.  The package
provides an exact solver, generators for the graph families with known
classifications, the cubic-graph edge-coloring theory, exact circulant matrix
verification, and a small-graph classification pipeline, wrapped in an HTTP
service with a thin command line client.
"""

__version__ = "0.1.0"
