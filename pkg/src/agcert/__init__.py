"""Exact computational algebraic geometry toolkit with a certificate-emitting CLI."""

from .arith import QQ, NFElem, NumberField, Rat

__version__ = "0.1.0"

__all__ = ["QQ", "NFElem", "NumberField", "Rat", "__version__"]
