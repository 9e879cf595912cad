"""Exact solutions of T-systems via flat connections, network minors and dimers."""

__version__ = "0.1.0"
