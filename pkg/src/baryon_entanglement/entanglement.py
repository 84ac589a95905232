"""Bipartite entanglement measures and Monte Carlo entanglement power."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import math
from typing import Sequence

import numpy as np

from .errors import ValidationError
from .flavor_sectors import INDEX
from .smatrix import SectorSMatrix

DEFAULT_SAMPLES = 100_000
DEFAULT_SEED = 0
CHUNK = 4096
NORM_TOL = 1e-12


@dataclass(frozen=True)
class BipartitePureState:
    amplitudes: np.ndarray
    dims: tuple[int, int]

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).ravel()
        d1, d2 = self.dims
        if amp.size != d1 * d2:
            raise ValidationError(f"expected {d1 * d2} amplitudes, got {amp.size}")
        if abs(np.vdot(amp, amp).real - 1.0) > NORM_TOL:
            raise ValidationError("state is not normalized")
        object.__setattr__(self, "amplitudes", amp)

    def matrix(self) -> np.ndarray:
        return self.amplitudes.reshape(self.dims)

    def reduced_density(self) -> np.ndarray:
        M = self.matrix()
        return M @ M.conj().T


def _as_state(state, dims=None) -> BipartitePureState:
    if isinstance(state, BipartitePureState):
        return state
    amp = np.asarray(state, dtype=complex).ravel()
    if dims is None:
        d = math.isqrt(amp.size)
        dims = (d, d)
    return BipartitePureState(amp, tuple(dims))


def linear_entropy(state, dims=None) -> float:
    """``1 - Tr(rho_1^2)`` for the reduced state of subsystem 1."""
    rho = _as_state(state, dims).reduced_density()
    return float(max(0.0, 1.0 - np.sum(np.abs(rho) ** 2)))


def von_neumann_entropy(state, dims=None) -> float:
    """``-Tr(rho_1 ln rho_1)`` in nats."""
    rho = _as_state(state, dims).reduced_density()
    w = np.linalg.eigvalsh(rho)
    w = w[w > 1e-300]
    return float(max(0.0, -np.sum(w * np.log(w))))


def concurrence(state) -> float:
    """``|alpha delta - beta gamma|`` for a two-qubit pure state."""
    s = _as_state(state, (2, 2)) if not isinstance(state, BipartitePureState) else state
    if s.dims != (2, 2):
        raise ValidationError("concurrence is defined here for two qubits only")
    a, b, c, d = s.amplitudes
    return float(abs(a * d - b * c))


def batch_linear_entropy(M: np.ndarray) -> np.ndarray:
    """Linear entropy of a batch of bipartite amplitude matrices, shape (n, d1, d2)."""
    rho = np.einsum("nij,nkj->nik", M, M.conj())
    purity = np.einsum("nik,nik->n", rho, rho.conj()).real
    return np.clip(1.0 - purity, 0.0, None)


@dataclass(frozen=True)
class EntanglementPowerEstimate:
    mean: float
    std_error: float
    samples: int

    def as_dict(self) -> dict:
        return {"mean": self.mean, "std_error": self.std_error, "samples": self.samples}


def _rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=key)))


def haar_states(rng: np.random.Generator, n: int, d: int) -> np.ndarray:
    """``n`` Haar-random pure states in dimension ``d`` (normalized complex Gaussians)."""
    z = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def _chunks(samples: int, chunk: int) -> list[tuple[int, int]]:
    return [(k, min(chunk, samples - k * chunk)) for k in range(-(-samples // chunk))]


def _reduce(parts: list[tuple[float, float]], samples: int) -> EntanglementPowerEstimate:
    # ordered sums keep the result independent of the worker count
    total = math.fsum(p[0] for p in parts)
    total_sq = math.fsum(p[1] for p in parts)
    mean = total / samples
    var = max(0.0, total_sq / samples - mean * mean)
    stderr = math.sqrt(var / (samples - 1)) if samples > 1 else 0.0
    return EntanglementPowerEstimate(mean, stderr, samples)


def _run_chunks(fn, samples: int, workers: int, chunk: int):
    jobs = _chunks(samples, chunk)
    if workers <= 1 or len(jobs) == 1:
        return [fn(k, n) for k, n in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: fn(*job), jobs))


def check_unitary(U: np.ndarray, tol: float = 1e-10) -> None:
    U = np.asarray(U)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise ValidationError("operator must be square")
    if np.linalg.norm(U @ U.conj().T - np.eye(U.shape[0])) > tol:
        raise ValidationError("operator is not unitary")


def entanglement_power(
    U: np.ndarray,
    dims: Sequence[int] = (2, 2),
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
    chunk: int = CHUNK,
) -> EntanglementPowerEstimate:
    """Monte Carlo average of the output linear entropy over Haar product inputs.

    Parameters
    ----------
    U : ndarray
        Unitary on the ``d1*d2`` product space, subsystem 1 is the slow index.
    dims : (int, int)
        Local dimensions.
    samples : int
        Number of product states.
    seed : int
        Root seed; chunk ``k`` draws from an independent stream keyed by ``(seed, k)``.
    workers : int
        Threads used for sampling; the result does not depend on it.
    """
    U = np.asarray(U, dtype=complex)
    d1, d2 = (int(x) for x in dims)
    if U.shape != (d1 * d2, d1 * d2):
        raise ValidationError(f"operator shape {U.shape} does not match dims {dims}")
    check_unitary(U)
    if samples < 1:
        raise ValidationError("samples must be positive")

    def work(k: int, n: int):
        rng = _rng(seed, k)
        a = haar_states(rng, n, d1)
        b = haar_states(rng, n, d2)
        psi = np.einsum("ni,nj->nij", a, b).reshape(n, d1 * d2)
        out = (psi @ U.T).reshape(n, d1, d2)
        e = batch_linear_entropy(out)
        return math.fsum(e), math.fsum(e * e)

    return _reduce(_run_chunks(work, samples, workers, chunk), samples)


def np_entanglement_power(delta0: float, delta1: float) -> float:
    """Closed form ``sin^2(2(delta1 - delta0)) / 6`` for the two-nucleon spin S-matrix."""
    return math.sin(2 * (delta1 - delta0)) ** 2 / 6


def qubit_quadrature(n_theta: int = 6, n_phi: int = 8) -> tuple[np.ndarray, np.ndarray]:
    """Bloch-sphere nodes and weights exact for low-degree polynomials in the state."""
    x, w = np.polynomial.legendre.leggauss(n_theta)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    ct, ph = np.meshgrid(x, phi, indexing="ij")
    half = np.arccos(ct) / 2
    states = np.stack([np.cos(half), np.exp(1j * ph) * np.sin(half)], axis=-1).reshape(-1, 2)
    weights = (np.repeat(w, n_phi) / (2 * n_phi)).ravel()
    return states, weights


def entanglement_power_quadrature(U: np.ndarray, n_theta: int = 6, n_phi: int = 8) -> float:
    """Deterministic two-qubit entanglement power via product quadrature on both Bloch spheres."""
    U = np.asarray(U, dtype=complex)
    check_unitary(U)
    states, weights = qubit_quadrature(n_theta, n_phi)
    psi = np.einsum("ai,bj->abij", states, states).reshape(-1, 4)
    out = (psi @ U.T).reshape(-1, 2, 2)
    e = batch_linear_entropy(out).reshape(len(weights), len(weights))
    return float(weights @ e @ weights)


@dataclass(frozen=True)
class SectorProfile:
    per_input: dict[tuple[str, str], EntanglementPowerEstimate]
    max: float
    average: float
    excluded: tuple[tuple[str, str], ...]

    def as_dict(self) -> dict:
        return {
            "per_input": [
                {"input": f"{a} {b}", **est.as_dict()} for (a, b), est in self.per_input.items()
            ],
            "max": self.max,
            "average": self.average,
            "excluded": [f"{a} {b}" for a, b in self.excluded],
        }


def _distinguishable_map(S: SectorSMatrix):
    """Map fermionic sector states to a particle-1 ⊗ particle-2 amplitude layout.

    Particle 1 carries the first baryon of each canonical pair, particle 2 the
    second; each local space is flavor ⊗ spin.  Returns the gather index
    arrays plus scale factors and local dimensions.
    """
    basis = S.basis
    d = basis.dim
    firsts = sorted({a for a, _ in basis.members}, key=INDEX.get)
    seconds = sorted({b for _, b in basis.members}, key=INDEX.get)
    f1 = {x: i for i, x in enumerate(firsts)}
    f2 = {x: i for i, x in enumerate(seconds)}
    src, dst, scale = [], [], []
    n2 = 2 * len(seconds)
    for k, (a, b) in enumerate(basis.ordered_pairs[: len(basis.members)]):
        factor = 1.0 if a == b else math.sqrt(2.0)
        for s1 in range(2):
            for s2 in range(2):
                src.append((2 * s1 + s2) * d + k)
                dst.append((2 * f1[a] + s1) * n2 + 2 * f2[b] + s2)
                scale.append(factor)
    return np.array(src), np.array(dst), np.array(scale), (2 * len(firsts), n2)


def sector_entanglement_profile(
    S: SectorSMatrix,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
    chunk: int = CHUNK,
) -> SectorProfile:
    """Spin-averaged output entanglement for each physical flavor input of a sector.

    For an ordered input pair ``(F1, F2)`` with distinct flavors, Haar-random
    spin states ``chi1, chi2`` are drawn, the antisymmetrized two-fermion state
    built from ``|F1 chi1> ⊗ |F2 chi2>`` is scattered with S, and the linear
    entropy is taken across particle 1 versus particle 2 with flavor and spin
    on each side.  Identical-flavor inputs cannot be spin product states and
    are listed in ``excluded``.
    """
    basis = S.basis
    d = basis.dim
    M = S.matrix
    pos = {p: k for k, p in enumerate(basis.ordered_pairs)}
    src, dst, scale, (n1, n2) = _distinguishable_map(S)
    r2 = math.sqrt(2.0)
    per_input: dict[tuple[str, str], EntanglementPowerEstimate] = {}
    excluded = []
    for idx_in, (a, b) in enumerate(basis.ordered_pairs):
        if a == b:
            excluded.append((a, b))
            continue
        k_ab, k_ba = pos[(a, b)], pos[(b, a)]
        cols_ab = [(2 * s1 + s2) * d + k_ab for s1 in range(2) for s2 in range(2)]
        cols_ba = [(2 * s2 + s1) * d + k_ba for s1 in range(2) for s2 in range(2)]
        # S acting on (|F1 chi1, F2 chi2> - |F2 chi2, F1 chi1>)/sqrt2 for product spins chi1 ⊗ chi2
        K = (M[:, cols_ab] - M[:, cols_ba]) / r2

        def work(k: int, n: int, K=K, stream=idx_in):
            rng = _rng(seed, stream, k)
            c1 = haar_states(rng, n, 2)
            c2 = haar_states(rng, n, 2)
            spin = np.einsum("ni,nj->nij", c1, c2).reshape(n, 4)
            out = spin @ K.T
            amp = np.zeros((n, n1 * n2), dtype=complex)
            amp[:, dst] = out[:, src] * scale
            e = batch_linear_entropy(amp.reshape(n, n1, n2))
            return math.fsum(e), math.fsum(e * e)

        per_input[(a, b)] = _reduce(_run_chunks(work, samples, workers, chunk), samples)
    means = [e.mean for e in per_input.values()]
    return SectorProfile(
        per_input,
        max(means) if means else 0.0,
        math.fsum(means) / len(means) if means else 0.0,
        tuple(excluded),
    )


def consistent_with_zero(est: EntanglementPowerEstimate, nsigma: float = 3.0, floor: float = 1e-12) -> bool:
    """``mean <= nsigma * std_error`` with an absolute floor for exactly-degenerate samples."""
    return est.mean <= nsigma * est.std_error + floor
