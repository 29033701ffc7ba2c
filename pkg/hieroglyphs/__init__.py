"""
Combinatorial commutative algebra rule.

Given a homogeneous ideal and a term order, compute the initial ideal,
polarize it, decompose it into minimal primes and draw the tablet of
hieroglyphs whose size is the degree of the variety.
"""

__version__ = "0.1.0"
