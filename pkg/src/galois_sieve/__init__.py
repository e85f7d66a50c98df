"""Finite fields as residue fields of algebraic groups.

The package builds field models (Kummer, Artin-Schreier, norm-one torus,
elliptic residue fields) whose Frobenius action has a simple geometric
description, and runs a discrete-logarithm sieve on an elliptic square
E x E whose factor basis is invariant under that action.
"""

__version__ = "0.1.0"
