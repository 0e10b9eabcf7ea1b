"""
Explicit Lie triple systems of every type, their tables and the classifier.
"""
