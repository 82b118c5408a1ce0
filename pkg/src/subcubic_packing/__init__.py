"""Exact search, constructive colourings and enumeration for S-packing colourings of subcubic graphs."""

__version__ = "0.1.0"
