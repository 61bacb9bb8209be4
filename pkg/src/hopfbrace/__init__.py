"""Exact computations with Hopf braces, brace triples and post-Hopf algebras."""

__version__ = "0.1.0"
