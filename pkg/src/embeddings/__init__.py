"""
Totally geodesic embeddings: products, diagonals, maximal tori, the
exterior-algebra construction of the exotic HP^2 and the centrosome of Sp2.
"""
