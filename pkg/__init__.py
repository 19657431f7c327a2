# File: __init__.py
"""Exact linear algebra over commutative domains"""
__version__ = "1.0.0"
