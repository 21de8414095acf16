"""Multiblock curvilinear SBP-SAT solver for the anisotropic wave equation."""

__version__ = "0.1.0"
