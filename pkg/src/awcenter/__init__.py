"""Exact verification of central elements in Askey-Wilson type algebras at roots of unity."""

__version__ = "0.1.0"
