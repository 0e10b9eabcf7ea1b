"""
Configuration management (tolerances, sampling, logging, output)
"""
