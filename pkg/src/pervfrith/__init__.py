"""Finite Pervin spaces, Frith pairs, bispaces, biframes and the functors between them."""

__version__ = "0.1.0"
