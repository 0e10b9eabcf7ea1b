"""
The complex Grassmannian G2(C^{n+2}) as the Lie triple system m1 of m.
"""
