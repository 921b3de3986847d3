"""Toric sheaves on weighted projective planes: exact K-theory, Hilbert
polynomials and generating functions of fixed-point data."""

from ._core import *  # noqa: F401,F403
from ._core import InvalidInput, InternalInconsistency, InsufficientWindow, WppParams  # noqa: F401

__version__ = "0.1.0"
