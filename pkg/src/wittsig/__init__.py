"""Exact invariants and Witt signatures of so(2r)_{2r} and so(2b+1)_{2b+1}."""

__version__ = "0.1.0"
