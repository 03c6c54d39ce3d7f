"""Exact-arithmetic Schubert calculus for the symmetric group.

Schubert and double Schubert polynomials by four independent routes,
Bruhat order, pipe-dream and bumpless-pipe-dream combinatorics, structure
constants, Littlewood-Richardson puzzles, Stanley symmetric functions,
Kazhdan-Lusztig polynomials, smoothness tests, Plucker machinery,
permutation arrays, and Newton-polytope coefficient tests.
"""

__version__ = "0.1.0"
