"""Entanglement suppression and emergent symmetries in octet-baryon scattering."""

from __future__ import annotations

from .errors import DomainError

__version__ = "0.1.0"

__all__ = ["DomainError", "__version__"]
