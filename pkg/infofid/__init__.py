"""
infofid - information and fidelity of projective measurements.
"""
__version__ = '1.0.0'
