"""Exact-arithmetic toolkit for 5-adic congruences of elongated-diamond counts.

Subpackages by theme: ``series`` (truncated ring arithmetic), ``hecke``
(coefficient-slicing operators), ``eta`` (cusp analysis), ``thetalab``
(theta identities), ``localize`` (the localized operator algebra and its
induction chain), ``dkscan`` (bulk progression scans), ``cli`` (front end).
"""

__version__ = "0.1.0"

__all__ = ["series", "hecke", "eta", "thetalab", "localize", "dkscan", "cli"]
