"""
Quaternion arithmetic and dense quaternionic linear algebra
"""
