# File: utils/__init__.py
"""Utility modules"""