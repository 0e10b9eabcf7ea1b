"""
Test suite for g2lts
"""
