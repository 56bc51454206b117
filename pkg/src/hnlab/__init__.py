"""Exact computations in the derived category of a genus-one curve.

Charges, phases, twist auto-equivalences, t-structures, stability
conditions, wall crossing for a two-component degeneration, and
deterministic shadow diagrams.  All core arithmetic is exact.
"""

__version__ = "0.1.0"
