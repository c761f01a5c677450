"""
HexHarmonic - Fourier analysis on the hexagon and the equilateral triangle.

Provides homogeneous coordinates, exact trigonometric quadrature, closed-form
summability kernels, summability operators and approximation experiments.
"""

__version__ = "1.0.0"
