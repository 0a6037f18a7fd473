"""Tensor algebra and differential geometry of curves and surfaces in 3-space."""

__version__ = "0.1.0"

from . import expr, tensor2, tensor4, curve, coords, surface  # noqa: F401
