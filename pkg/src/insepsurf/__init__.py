"""Inseparable quotients of product surfaces in characteristic 2."""

__version__ = "0.1.0"
