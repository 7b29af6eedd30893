"""Exact-arithmetic toolkit for qutrit Clifford+T and Clifford+R circuits."""

__version__ = "0.1.0"
