"""
Conjugations, Cartan subalgebras, roots and characteristic angles
"""
