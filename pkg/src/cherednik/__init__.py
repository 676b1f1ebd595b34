"""Exact-arithmetic engine for Weyl group representation theory.

Classifies the irreducible W-representations that extend to modules of the
rational Cherednik algebra at t=0 killing both polynomial parts, and relates
the resulting Calogero-Moser cells to the cuspidal two-sided cells.
Everything is computed over the rationals; no floating point anywhere.
"""

__version__ = "0.1.0"
