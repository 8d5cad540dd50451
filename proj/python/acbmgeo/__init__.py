"""Exact curvature and Ricci-like soliton computations for almost contact
B-metric manifolds presented by frames.

All symbolic values cross the boundary as exact strings; parse them with
``fractions.Fraction`` when they are constants.
"""

from ._core import Manifold

__all__ = ["Manifold"]
__version__ = "1.0.0"
