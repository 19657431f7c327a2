# File: orchestration/__init__.py
"""Orchestration modules"""