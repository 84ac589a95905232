"""SU(3) generators, structure constants, Casimir operators and irrep labels."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import itertools

import numpy as np

from .octet import octet_field_matrix


@dataclass(frozen=True)
class IrrepLabel:
    name: str
    dynkin: tuple[int, int]
    flavor_symmetry: str  # "symmetric" | "antisymmetric"
    spin_channel: str  # "1S0" | "3S1"

    @property
    def exchange_parity(self) -> int:
        return 1 if self.flavor_symmetry == "symmetric" else -1

    @property
    def dimension(self) -> int:
        p, q = self.dynkin
        return (p + 1) * (q + 1) * (p + q + 2) // 2

    @property
    def signature(self) -> tuple[Fraction, Fraction]:
        return casimir_eigenvalues(*self.dynkin)

    def __str__(self) -> str:
        return self.name


IRREPS: dict[str, IrrepLabel] = {
    "27": IrrepLabel("27", (2, 2), "symmetric", "1S0"),
    "8S": IrrepLabel("8S", (1, 1), "symmetric", "1S0"),
    "1": IrrepLabel("1", (0, 0), "symmetric", "1S0"),
    "10": IrrepLabel("10", (3, 0), "antisymmetric", "3S1"),
    "10bar": IrrepLabel("10bar", (0, 3), "antisymmetric", "3S1"),
    "8A": IrrepLabel("8A", (1, 1), "antisymmetric", "3S1"),
}
SYMMETRIC_IRREPS = ("27", "8S", "1")
ANTISYMMETRIC_IRREPS = ("10", "10bar", "8A")


def gell_mann(index: int) -> np.ndarray:
    """Generator ``T^a = lambda^a / 2`` in the defining representation.

    Parameters
    ----------
    index : int
        Generator number, 1 through 8.

    Returns
    -------
    numpy.ndarray
        3x3 hermitian traceless matrix with ``Tr(T^a T^b) = delta^{ab}/2``.
    """
    if isinstance(index, bool) or not isinstance(index, (int, np.integer)) or not 1 <= index <= 8:
        raise ValueError(f"Gell-Mann index must be an integer in 1..8, got {index!r}")
    lam = np.zeros((3, 3), dtype=complex)
    if index == 1:
        lam[0, 1] = lam[1, 0] = 1
    elif index == 2:
        lam[0, 1], lam[1, 0] = -1j, 1j
    elif index == 3:
        lam[0, 0], lam[1, 1] = 1, -1
    elif index == 4:
        lam[0, 2] = lam[2, 0] = 1
    elif index == 5:
        lam[0, 2], lam[2, 0] = -1j, 1j
    elif index == 6:
        lam[1, 2] = lam[2, 1] = 1
    elif index == 7:
        lam[1, 2], lam[2, 1] = -1j, 1j
    else:
        lam[:] = np.diag([1, 1, -2]) / np.sqrt(3.0)
    return lam / 2


@lru_cache(maxsize=None)
def _fundamental() -> np.ndarray:
    T = np.array([gell_mann(a) for a in range(1, 9)])
    T.setflags(write=False)
    return T


@lru_cache(maxsize=None)
def structure_constants() -> tuple[np.ndarray, np.ndarray]:
    """Return ``(f, d)`` as 8x8x8 real arrays with zero-based indices.

    ``f[a,b,c] = -2i Tr([T^a,T^b] T^c)`` and ``d[a,b,c] = 2 Tr({T^a,T^b} T^c)``.
    """
    T = _fundamental()
    f = np.zeros((8, 8, 8))
    d = np.zeros((8, 8, 8))
    for a, b, c in itertools.product(range(8), repeat=3):
        comm = T[a] @ T[b] - T[b] @ T[a]
        anti = T[a] @ T[b] + T[b] @ T[a]
        f[a, b, c] = (-2j * np.trace(comm @ T[c])).real
        d[a, b, c] = (2 * np.trace(anti @ T[c])).real
    # clean rounding noise so exact zeros stay exact
    f[np.abs(f) < 1e-15] = 0.0
    d[np.abs(d) < 1e-15] = 0.0
    f.setflags(write=False)
    d.setflags(write=False)
    return f, d


def casimir_eigenvalues(p: int, q: int) -> tuple[Fraction, Fraction]:
    """Exact quadratic and cubic Casimir eigenvalues of the irrep with Dynkin labels (p, q)."""
    if p < 0 or q < 0:
        raise ValueError("Dynkin labels must be non-negative")
    c1 = Fraction(p * p + q * q + 3 * p + 3 * q + p * q, 3)
    c2 = Fraction((p - q) * (3 + p + 2 * q) * (3 + q + 2 * p), 18)
    return c1, c2


@lru_cache(maxsize=None)
def octet_generators() -> np.ndarray:
    """Generators on the octet in the physical baryon basis, shape (8, 8, 8).

    Obtained from the adjoint action ``[T^a, B]`` on the field matrix,
    ``g^a[G, F] = Tr(N_G^dagger [T^a, N_F])``.
    """
    T = _fundamental()
    N = octet_field_matrix()
    comm = np.einsum("aij,jkF->aikF", T, N) - np.einsum("ijF,ajk->aikF", N, T)
    g = np.einsum("ijG,aijF->aGF", N.conj(), comm)
    g.setflags(write=False)
    return g


def adjoint_generators() -> np.ndarray:
    """Adjoint generators ``(T^a)_{bc} = -i f^{abc}`` in the Gell-Mann component basis."""
    f, _ = structure_constants()
    return -1j * f.astype(complex)


def tensor_generators(single: np.ndarray | None = None) -> np.ndarray:
    """Two-particle generators ``g⊗1 + 1⊗g``; default is the physical octet basis.

    The two-baryon index is ``8*i + j`` for the ordered pair ``(i, j)``.
    """
    if single is None:
        return _physical_tensor_generators()
    single = np.asarray(single)
    n = single.shape[-1]
    eye = np.eye(n)
    return np.array([np.kron(g, eye) + np.kron(eye, g) for g in single])


@lru_cache(maxsize=None)
def _physical_tensor_generators() -> np.ndarray:
    G = tensor_generators(octet_generators())
    G.setflags(write=False)
    return G


def casimir_operators(G: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Quadratic ``sum_a G^a G^a`` and cubic ``d^{abc} G^a G^b G^c`` Casimir matrices."""
    _, d = structure_constants()
    C1 = np.einsum("aij,ajk->ik", G, G)
    GG = np.einsum("bij,cjk->bcik", G, G)
    H = np.einsum("abc,bcik->aik", d, GG)
    C2 = np.einsum("aij,ajk->ik", G, H)
    return C1, C2


@lru_cache(maxsize=None)
def two_baryon_casimirs() -> tuple[np.ndarray, np.ndarray]:
    C1, C2 = casimir_operators(_physical_tensor_generators())
    C1.setflags(write=False)
    C2.setflags(write=False)
    return C1, C2


@lru_cache(maxsize=None)
def flavor_exchange() -> np.ndarray:
    """Permutation ``|i j> -> |j i>`` on the 64-dim two-baryon flavor space."""
    P = np.zeros((64, 64))
    for i in range(8):
        for j in range(8):
            P[8 * j + i, 8 * i + j] = 1.0
    P.setflags(write=False)
    return P


def lowering_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(I-, V-, U-)`` acting on octet flavor states in the physical basis."""
    g = octet_generators()
    return g[0] - 1j * g[1], g[3] - 1j * g[4], g[5] - 1j * g[6]
