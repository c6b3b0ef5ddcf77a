"""A PiCTeX-style picture engine: fixed-point geometry, dot-sampled curves, SVG output."""

from .fixed import Dimen, UNITY, parse_dimen
from .context import Picture, State

__all__ = ["Dimen", "UNITY", "parse_dimen", "Picture", "State"]
__version__ = "0.1.0"
