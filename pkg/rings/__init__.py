# File: rings/__init__.py
"""Commutative domains and fractions"""