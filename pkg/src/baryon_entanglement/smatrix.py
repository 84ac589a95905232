"""Low-energy s-wave S-matrix on spin ⊗ flavor for each (Q, S) sector."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
import math
from typing import Mapping, Sequence

import numpy as np

from .flavor_sectors import SectorBasis, SectorLabel, parse_sector, su3_basis
from .su3_algebra import SYMMETRIC_IRREPS

PAULI = np.array(
    [[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]], dtype=complex
)


def spin_projectors() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(P_singlet, P_triplet, SWAP)`` on two spin-1/2 particles.

    Basis order is ``|uu>, |ud>, |du>, |dd>``.
    """
    sigma_dot = sum(np.kron(s, s) for s in PAULI)
    eye = np.eye(4)
    p_singlet = ((eye - sigma_dot) / 4).real
    p_triplet = ((3 * eye + sigma_dot) / 4).real
    swap = ((eye + sigma_dot) / 2).real
    return p_singlet, p_triplet, swap


@dataclass(frozen=True)
class PhaseShiftSet:
    """Six s-wave phase shifts (radians), one per irrep of 8x8."""

    d27: float = 0.0
    d8S: float = 0.0
    d1: float = 0.0
    d10: float = 0.0
    d10bar: float = 0.0
    d8A: float = 0.0

    def __post_init__(self):
        for f in fields(self):
            if not math.isfinite(getattr(self, f.name)):
                raise ValueError(f"phase {f.name} must be finite")

    def get(self, irrep: str) -> float:
        return getattr(self, "d" + irrep)

    def as_dict(self) -> dict[str, float]:
        return {f.name[1:]: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def equal(cls, delta: float) -> "PhaseShiftSet":
        return cls(delta, delta, delta, delta, delta, delta)

    @classmethod
    def swap_point(cls, delta_antisym: float, offset: float = math.pi / 2) -> "PhaseShiftSet":
        """Symmetric-irrep phases shifted by ``offset`` from a common antisymmetric phase."""
        s = delta_antisym + offset
        return cls(s, s, s, delta_antisym, delta_antisym, delta_antisym)

    @classmethod
    def from_mapping(cls, values: Mapping[str, float], default: float = 0.0) -> "PhaseShiftSet":
        kw = {}
        for key, val in values.items():
            name = key if key.startswith("d") else "d" + key
            name = {"d8s": "d8S", "d8a": "d8A"}.get(name, name)
            if name not in {f.name for f in fields(cls)}:
                raise KeyError(f"unknown irrep phase {key!r}")
            kw[name] = float(val)
        base = cls.equal(default)
        return replace(base, **kw)


@dataclass(frozen=True)
class SectorSMatrix:
    sector: SectorLabel
    matrix: np.ndarray  # (4d, 4d), index = 4-spin ⊗ d-flavor (kron order)
    basis: SectorBasis

    @property
    def flavor_dim(self) -> int:
        return self.basis.dim

    def physical_projector(self) -> np.ndarray:
        """Projector onto states odd under full exchange (spin swap ⊗ flavor swap)."""
        return fermionic_projector(self.basis)


def fermionic_projector(basis: SectorBasis) -> np.ndarray:
    _, _, swap = spin_projectors()
    X = np.kron(swap, basis.exchange())
    return (np.eye(X.shape[0]) - X) / 2


def build(label: SectorLabel | Sequence[int], phases: PhaseShiftSet) -> SectorSMatrix:
    """Assemble the unitary S-matrix of one sector.

    Spin singlets pair with flavor-symmetric irreps and spin triplets with
    flavor-antisymmetric ones.  The statistics-forbidden combinations
    (singlet ⊗ antisymmetric flavor, triplet ⊗ symmetric flavor) are left
    untouched, so the result is unitary on the whole 4d space.
    """
    label = parse_sector(label)
    basis = su3_basis(label)
    p_singlet, p_triplet, _ = spin_projectors()
    d = basis.dim
    sym_part = np.zeros((d, d), dtype=complex)
    anti_part = np.zeros((d, d), dtype=complex)
    for irrep in basis.irreps:
        term = basis.projector(irrep) * np.exp(2j * phases.get(irrep))
        if irrep in SYMMETRIC_IRREPS:
            sym_part += term
        else:
            anti_part += term
    S = (
        np.kron(p_singlet, sym_part)
        + np.kron(p_triplet, anti_part)
        + np.kron(p_singlet, basis.antisymmetric_projector())
        + np.kron(p_triplet, basis.symmetric_projector())
    )
    return SectorSMatrix(label, S, basis)


def _phase_residual(A: np.ndarray, B: np.ndarray) -> tuple[float, float]:
    # min over phi of ||A - e^{i phi} B|| / ||A||, phi from the polar angle of Tr(B^dagger A)
    overlap = np.vdot(B, A)
    phi = float(np.angle(overlap)) if abs(overlap) > 0 else 0.0
    resid = np.linalg.norm(A - np.exp(1j * phi) * B) / np.linalg.norm(A)
    return float(resid), phi


def identity_swap_decomposition(S: SectorSMatrix) -> dict[str, float]:
    """Distance of the physical block of S from ``e^{i phi} 1⊗1`` and ``e^{i phi} SWAP⊗1``.

    Returns the relative Frobenius residuals and the optimal global phases,
    each evaluated on the fermionic subspace.
    """
    Pi = S.physical_projector()
    _, _, swap = spin_projectors()
    A = Pi @ S.matrix @ Pi
    r_i, phi_i = _phase_residual(A, Pi)
    G = Pi @ np.kron(swap, np.eye(S.flavor_dim)) @ Pi
    r_s, phi_s = _phase_residual(A, G)
    return {"residual_I": r_i, "phase_I": phi_i, "residual_SWAP": r_s, "phase_SWAP": phi_s}


def np_smatrix(delta0: float, delta1: float) -> np.ndarray:
    """Two-qubit spin S-matrix ``P_singlet e^{2i delta0} + P_triplet e^{2i delta1}``."""
    p_singlet, p_triplet, _ = spin_projectors()
    return p_singlet * np.exp(2j * delta0) + p_triplet * np.exp(2j * delta1)


def full_smatrix(phases: PhaseShiftSet) -> tuple[np.ndarray, list[tuple[SectorLabel, slice]]]:
    """Direct sum of all sector S-matrices, with the slice each sector occupies."""
    from .flavor_sectors import realized_sectors

    blocks, slices, start = [], [], 0
    for label in realized_sectors():
        m = build(label, phases).matrix
        blocks.append(m)
        slices.append((label, slice(start, start + m.shape[0])))
        start += m.shape[0]
    total = np.zeros((start, start), dtype=complex)
    for m, (_, sl) in zip(blocks, slices):
        total[sl, sl] = m
    return total, slices
