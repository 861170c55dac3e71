"""BK Wedge Toolkit - ℓp-wedge metrics, Rips/Čech complexes and GF(2) homology"""

__version__ = "1.0.0"
