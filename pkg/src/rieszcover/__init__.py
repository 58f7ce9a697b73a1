"""Exact tools for pre-Riesz spaces and their Riesz covers."""

__version__ = "0.1.0"
