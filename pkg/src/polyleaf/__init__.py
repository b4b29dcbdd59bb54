"""Symbolic-numeric tools for functions constant on the level curves of a polynomial."""

__version__ = "0.1.0"
