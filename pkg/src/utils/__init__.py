"""
Logging, errors, validation and serialization
"""
