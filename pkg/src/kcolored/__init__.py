"""Certified upper bounds on the geometric k-colored crossing constant"""

__version__ = "0.1.0"
