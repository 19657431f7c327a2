# File: core/__init__.py
"""Core components"""