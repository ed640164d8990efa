"""
thagkl - exact equivariant Kazhdan-Lusztig polynomials of thagomizer and cycle matroids
"""

__version__ = "0.1.0"
__author__ = "thagkl Development Team"
