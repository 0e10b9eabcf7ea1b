"""
Real subspaces of m and Lie triple system verification
"""
