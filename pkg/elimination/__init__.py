# File: elimination/__init__.py
"""Fraction-free elimination"""