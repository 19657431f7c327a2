# File: solvers/__init__.py
"""Linear system solvers"""