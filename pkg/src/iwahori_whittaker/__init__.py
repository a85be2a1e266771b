"""Iwahori-spherical Whittaker values of Steinberg representations, with oracles."""

from .errors import ConfigurationError, DomainError
from .root_system import Coweight, WeylElement, build_root_system
from .whittaker import eval_whittaker

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError",
    "Coweight",
    "DomainError",
    "WeylElement",
    "build_root_system",
    "eval_whittaker",
]
