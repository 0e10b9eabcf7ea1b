"""
g2lts - Lie triple systems of quaternionic and complex 2-Grassmannians
"""

__version__ = "0.1.0"
