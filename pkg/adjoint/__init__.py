# File: adjoint/__init__.py
"""Adjoint matrix factorization"""