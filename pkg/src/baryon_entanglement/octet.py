"""Spin-1/2 baryon octet: flavor labels, quantum numbers and the 3x3 field matrix."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


@dataclass(frozen=True)
class Baryon:
    name: str
    symbol: str
    charge: int
    strangeness: int
    isospin_3: Fraction

    def __str__(self) -> str:
        return self.name


def _b(name, symbol, q, s, i3):
    return Baryon(name, symbol, q, s, Fraction(i3))


# Octet index order used for every flavor basis in the package.
OCTET: tuple[Baryon, ...] = (
    _b("n", "n", 0, 0, "-1/2"),
    _b("p", "p", 1, 0, "1/2"),
    _b("Sigma+", "Σ⁺", 1, -1, "1"),
    _b("Sigma0", "Σ⁰", 0, -1, "0"),
    _b("Sigma-", "Σ⁻", -1, -1, "-1"),
    _b("Lambda", "Λ", 0, -1, "0"),
    _b("Xi-", "Ξ⁻", -1, -2, "-1/2"),
    _b("Xi0", "Ξ⁰", 0, -2, "1/2"),
)

NAMES: tuple[str, ...] = tuple(b.name for b in OCTET)
INDEX: dict[str, int] = {b.name: i for i, b in enumerate(OCTET)}

_ALIASES = {
    "Σ⁺": "Sigma+", "Σ⁰": "Sigma0", "Σ⁻": "Sigma-", "Λ": "Lambda",
    "Ξ⁻": "Xi-", "Ξ⁰": "Xi0", "Sp": "Sigma+", "S0": "Sigma0", "Sm": "Sigma-",
    "L": "Lambda", "Xm": "Xi-", "X0": "Xi0", "Sigmap": "Sigma+", "Sigmam": "Sigma-",
    "Xim": "Xi-", "Xi0": "Xi0",
}

# Charge conjugation inside the octet (weight-diagram reflection).
CONJUGATE: dict[str, str] = {
    "n": "Xi0", "Xi0": "n", "p": "Xi-", "Xi-": "p",
    "Sigma+": "Sigma-", "Sigma-": "Sigma+", "Sigma0": "Sigma0", "Lambda": "Lambda",
}


def baryon(name: str) -> Baryon:
    """Look up a baryon by ASCII name, short alias, or unicode symbol."""
    key = _ALIASES.get(name, name)
    if key not in INDEX:
        raise KeyError(f"unknown baryon {name!r}")
    return OCTET[INDEX[key]]


def octet_field_matrix() -> np.ndarray:
    """Coefficient tensor ``N[k, l, F]`` of flavor ``F`` in entry ``(k, l)`` of B.

    Each slice ``N[:, :, F]`` is traceless and the slices are orthonormal
    under ``Tr(X^dagger Y)``.
    """
    s2, s6 = np.sqrt(2.0), np.sqrt(6.0)
    N = np.zeros((3, 3, 8), dtype=complex)
    i = INDEX
    N[0, 0, i["Sigma0"]] = 1 / s2
    N[0, 0, i["Lambda"]] = 1 / s6
    N[0, 1, i["Sigma+"]] = 1
    N[0, 2, i["p"]] = 1
    N[1, 0, i["Sigma-"]] = 1
    N[1, 1, i["Sigma0"]] = -1 / s2
    N[1, 1, i["Lambda"]] = 1 / s6
    N[1, 2, i["n"]] = 1
    N[2, 0, i["Xi-"]] = 1
    N[2, 1, i["Xi0"]] = 1
    N[2, 2, i["Lambda"]] = -2 / s6
    return N


def baryon_matrix(amplitudes: dict[str, complex]) -> np.ndarray:
    """Assemble the 3x3 octet matrix from per-flavor amplitudes (missing ones are zero)."""
    N = octet_field_matrix()
    vec = np.zeros(8, dtype=complex)
    for name, value in amplitudes.items():
        vec[INDEX[baryon(name).name]] = value
    return N @ vec
