# File: config/__init__.py
"""Configuration modules"""