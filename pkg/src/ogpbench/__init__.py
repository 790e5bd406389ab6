"""Random-instance benchmarks for local algorithms on IS, MAXCUT and p-spin."""

__version__ = "0.1.0"
