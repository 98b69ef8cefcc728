"""Exact tools for the KLT pair on Richardson varieties of Kac-Moody flag varieties."""

__version__ = "0.1.0"
