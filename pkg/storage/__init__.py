# File: storage/__init__.py
"""Storage modules"""