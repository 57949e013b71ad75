"""Exact computations for admissibility of finite groups.

Decides whether every Sylow subgroup of a permutation group is abelian of
rank at most two (or metacyclic), and for admissible groups builds
re-verifiable witness certificates out of symbol algebras over Q(zeta)(f, t).
"""

__version__ = "0.1.0"
