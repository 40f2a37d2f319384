"""
Gauss homotopy - Gauss words and phrases, their homotopy moves and invariants.
Computes S, S_m, z and z_o, coverings and heights, and bounded homotopy searches.
"""

__version__ = "0.1.0"
