"""
Tangent-space model of the quaternionic 2-Grassmannian
"""
