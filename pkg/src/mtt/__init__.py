"""Kernel for a dependent type theory whose identity proofs are Moore paths."""

__version__ = "0.1.0"
