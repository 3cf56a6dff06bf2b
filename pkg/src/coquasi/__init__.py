"""Exact computations with coquasi-bialgebras, preantipodes and their reconstruction."""

__version__ = "0.1.0"
