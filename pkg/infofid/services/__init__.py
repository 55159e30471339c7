"""
Services package - state sampling, measurement, closed forms, estimation and output.
"""
