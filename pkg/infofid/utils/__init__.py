"""
Utilities package - errors and argument helpers.
"""
