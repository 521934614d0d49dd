"""Flattened tree grammars, padding words and regular separability reductions."""

from flatsep.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
