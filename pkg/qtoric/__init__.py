"""Exact computations for noncommutative symmetric functions and quasitoric manifolds."""

__version__ = "0.1.0"
