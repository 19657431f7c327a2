# File: matrix/__init__.py
"""Dense exact matrices"""