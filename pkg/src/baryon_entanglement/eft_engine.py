"""Pionless EFT for octet baryons: effective range expansion, scheme matching,
contact couplings and their SU(3) irrep images.

Units: masses, momenta and the PDS scale in MeV; lengths in fm; couplings in
MeV^-2 (C0) and MeV^-4 (C2).  ``HBARC`` converts between the two.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from functools import lru_cache
import cmath
import math
import warnings
from typing import Callable, Sequence, Union

import numpy as np

from .errors import PoleError, ValidationError
from .octet import octet_field_matrix
from .su3_algebra import gell_mann

HBARC = 197.3269804  # MeV fm

Number = Union[int, float, Fraction]


class PoleWarning(RuntimeWarning):
    pass


# ----------------------------------------------------------------------------
# effective range expansion and amplitudes


@dataclass(frozen=True)
class EREParams:
    """Scattering length ``a`` (fm), range parameters ``r = (r0, r1, ...)`` (fm), scale ``Lambda`` (fm^-1)."""

    a: float
    r: tuple[float, ...] = ()
    Lambda: float = 1.0

    def __post_init__(self):
        if not self.Lambda > 0:
            raise ValidationError("Lambda must be positive")
        object.__setattr__(self, "r", tuple(float(x) for x in self.r))
        if not all(math.isfinite(x) for x in self.r):
            raise ValidationError("range parameters must be finite")


def ere_pcotdelta(params: EREParams, p: float) -> float:
    """``p cot(delta)`` in fm^-1 for momentum ``p`` in fm^-1.

    ``-1/a + (Lambda^2/2) sum_n r_n (p^2/Lambda^2)^(n+1)``, so the first term
    is ``r0 p^2 / 2``.  ``a = 0`` returns ``inf`` (free theory).
    """
    if p < 0:
        raise ValidationError("momentum must be non-negative")
    if params.a == 0:
        return math.inf
    x = p * p / params.Lambda**2
    tail = sum(rn * x ** (n + 1) for n, rn in enumerate(params.r))
    return -1.0 / params.a + 0.5 * params.Lambda**2 * tail


def amplitude_from_phase(delta: float, p: float, M: float) -> complex:
    """``(4 pi / M) / (p cot delta - i p)``, written as ``(4 pi / (M p)) e^{i delta} sin delta``."""
    if p <= 0:
        raise ValidationError("momentum must be positive")
    return 4 * math.pi / (M * p) * cmath.exp(1j * delta) * math.sin(delta)


def smatrix_from_amplitude(A: complex, p: float, M: float) -> complex:
    return 1 + 1j * M * p / (2 * math.pi) * A


def natural_expansion(a: float, r0: float, p: float, order: int, M: float) -> complex:
    """Partial sum of the small-``a`` expansion of the amplitude.

    ``a`` and ``r0`` in fm, ``p`` and ``M`` in MeV; returns MeV^-2.
    """
    if order not in (0, 1, 2):
        raise ValidationError("order must be 0, 1 or 2")
    a_ = a / HBARC
    r_ = r0 / HBARC
    terms = [1.0, -1j * a_ * p, (0.5 * a_ * r_ - a_ * a_) * p * p]
    return -(4 * math.pi * a_ / M) * sum(terms[: order + 1])


# ----------------------------------------------------------------------------
# scheme matching and resummation


@dataclass(frozen=True)
class SchemeContext:
    M: float  # MeV
    mu: float = 0.0  # MeV, 0 selects minimal subtraction

    def __post_init__(self):
        if not self.M > 0:
            raise ValidationError("mass must be positive")
        if self.mu < 0:
            raise ValidationError("PDS scale must be non-negative")

    @property
    def unitarity_coupling(self) -> float:
        """Fixed-point coupling ``-4 pi / (M mu)``."""
        if self.mu == 0:
            raise PoleError("the unitarity fixed point needs mu > 0")
        return -4 * math.pi / (self.M * self.mu)


def pds_couplings(a: float, r0: float, ctx: SchemeContext, order: int = 1) -> tuple[float, ...]:
    """Couplings ``(C0, C2, ..., C_{2 order})`` matched to ``p cot delta = -1/a + r0 p^2/2``.

    ``a`` and ``r0`` in fm.  ``C0 = 4 pi / (M (1/a - mu))`` and
    ``C_{2n} = C0 (r0/2)^n / (1/a - mu)^n``; ``mu = 0`` is minimal subtraction.
    """
    inv_a = HBARC / a if a != 0 else math.inf
    gap = inv_a - ctx.mu
    if gap == 0:
        raise PoleError("1/a equals mu: coupling diverges")
    if math.isinf(gap):
        return (0.0,) * (order + 1)
    c0 = 4 * math.pi / (ctx.M * gap)
    half_r = 0.5 * r0 / HBARC
    return tuple(c0 * (half_r / gap) ** n for n in range(order + 1))


def matched_coupling_sum(a: float, r0: float, ctx: SchemeContext, p: float) -> float:
    """All-orders sum ``sum_n C_2n p^2n`` of the matched couplings, closed form."""
    inv_a = HBARC / a if a != 0 else math.inf
    denom = inv_a - ctx.mu - 0.5 * (r0 / HBARC) * p * p
    if denom == 0:
        raise PoleError("matched coupling series diverges at this momentum")
    return 4 * math.pi / (ctx.M * denom) if math.isfinite(denom) else 0.0


CouplingInput = Union[Sequence[float], Callable[[float], float]]


def _coupling_sum(C: CouplingInput, p: float) -> float:
    if callable(C):
        return C(p)
    return sum(c * p ** (2 * n) for n, c in enumerate(C))


def amplitude_denominator(C: CouplingInput, ctx: SchemeContext, p: float) -> complex:
    K = _coupling_sum(C, p)
    return 1 + ctx.M * (ctx.mu + 1j * p) / (4 * math.pi) * K


def resummed_amplitude(C: CouplingInput, ctx: SchemeContext, p: float, pole_tol: float = 1e-12) -> complex:
    """Bubble-chain amplitude ``-K / (1 + M (mu + i p) K / 4 pi)`` with ``K = sum C_2n p^2n``.

    ``C`` is a coefficient list or a callable returning ``K(p)``.  Near a pole
    a ``PoleWarning`` is issued and the (large) value is still returned.
    """
    K = _coupling_sum(C, p)
    den = amplitude_denominator(C, ctx, p)
    if abs(den) < pole_tol:
        warnings.warn(f"amplitude denominator {abs(den):.3e} at p={p}", PoleWarning, stacklevel=2)
        if den == 0:
            return complex(math.inf, math.inf)
    return -K / den


def amplitude_leading(C0: float, ctx: SchemeContext, p: float) -> complex:
    """Leading unnatural-counting amplitude, ``C0`` to all orders."""
    return -C0 / (1 + C0 * ctx.M / (4 * math.pi) * (ctx.mu + 1j * p))


def amplitude_subleading(C0: float, C2: float, ctx: SchemeContext, p: float) -> complex:
    """One ``C2`` insertion dressed by ``C0`` bubbles."""
    return -C2 * p * p / (1 + C0 * ctx.M / (4 * math.pi) * (ctx.mu + 1j * p)) ** 2


def pcotdelta_from_amplitude(A: complex, ctx: SchemeContext, p: float) -> complex:
    """Invert the amplitude: ``4 pi / (M A) + i p`` (MeV)."""
    return 4 * math.pi / (ctx.M * A) + 1j * p


def phase_from_coupling(C_R: float, ctx: SchemeContext, p: float) -> float:
    """Phase shift of a single channel with momentum-independent coupling ``C_R``.

    ``p cot delta = -(mu + 4 pi / (M C_R))``; the branch ``delta = atan(p / p cot delta)``
    keeps delta continuous in p with values in (-pi/2, pi/2], and the unitarity
    point ``p cot delta = 0`` maps to exactly pi/2.
    """
    if C_R == 0:
        return 0.0
    K = -(ctx.mu + 4 * math.pi / (ctx.M * C_R))
    if ctx.mu > 0 and math.isclose(C_R, ctx.unitarity_coupling, rel_tol=1e-14, abs_tol=0.0):
        K = 0.0
    if K == 0:
        return math.pi / 2
    if p == 0:
        return 0.0
    return math.atan(p / K)


# ----------------------------------------------------------------------------
# Wilson coefficients and irrep couplings


@dataclass(frozen=True)
class WilsonSet:
    c1: Number = 0
    c2: Number = 0
    c3: Number = 0
    c4: Number = 0
    c5: Number = 0
    c6: Number = 0

    def as_tuple(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))

    def as_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.as_tuple()])

    def as_dict(self) -> dict:
        return {f.name: float(getattr(self, f.name)) for f in fields(self)}


@dataclass(frozen=True)
class IrrepCouplings:
    C27: Number
    C8S: Number
    C1: Number
    C10bar: Number
    C10: Number
    C8A: Number

    def get(self, irrep: str):
        return getattr(self, "C" + irrep)

    def as_dict(self) -> dict:
        return {f.name[1:]: float(getattr(self, f.name)) for f in fields(self)}


_F = Fraction
# rows: C27, C8S, C1, C10bar, C10, C8A ; columns: c1..c6
IRREP_MAP = (
    (1, -1, 0, 0, 1, -1),
    (_F(-2, 3), _F(2, 3), _F(-5, 6), _F(5, 6), 1, -1),
    (_F(-1, 3), _F(1, 3), _F(-8, 3), _F(8, 3), 1, -1),
    (1, 1, 0, 0, 1, 1),
    (-1, -1, 0, 0, 1, 1),
    (0, 0, _F(3, 2), _F(3, 2), 1, 1),
)


def irrep_couplings(w: WilsonSet) -> IrrepCouplings:
    """Six SU(3) channel couplings as linear combinations of ``c1..c6`` (exact for rationals)."""
    c = w.as_tuple()
    vals = [sum(m * x for m, x in zip(row, c)) for row in IRREP_MAP]
    return IrrepCouplings(*vals)


def wilson_from_irrep(C: IrrepCouplings) -> WilsonSet:
    """Invert the irrep map (it is non-singular on the six-operator basis)."""
    A = np.array([[float(x) for x in row] for row in IRREP_MAP])
    b = np.array([float(C.C27), float(C.C8S), float(C.C1), float(C.C10bar), float(C.C10), float(C.C8A)])
    return WilsonSet(*np.linalg.solve(A, b))


def su6_wilson(a_c: Number, b_c: Number) -> WilsonSet:
    """Wilson coefficients of the two-parameter SU(6) spin-flavor Lagrangian."""
    F = Fraction
    return WilsonSet(
        -F(7, 27) * b_c,
        F(1, 9) * b_c,
        F(10, 81) * b_c,
        -F(14, 81) * b_c,
        a_c + F(2, 9) * b_c,
        -F(1, 9) * b_c,
    )


# ----------------------------------------------------------------------------
# brute-force contact vertex on two-baryon spin-flavor space

# Each operator: (flavor trace structure, field order, spin contraction)
# field order "caca" is B^dag B B^dag B, "ccaa" is B^dag B^dag B B.
_OPERATORS = {
    "c1": ("single", "caca", "AB,CD"),
    "c2": ("single", "caca", "AD,BC"),
    "c3": ("single", "ccaa", "AC,BD"),
    "c4": ("single", "ccaa", "AD,BC"),
    "c5": ("double", "caca", "AB,CD"),
    "c6": ("double", "caca", "AD,BC"),
    "dt": ("double", "ccaa", "AC,BD"),
}
OPERATOR_NAMES = tuple(_OPERATORS)


def _flavor_tensor(kind: str, order: str) -> np.ndarray:
    N = octet_field_matrix()
    Nd = np.conj(N.transpose(1, 0, 2))
    first = Nd
    second = N if order == "caca" else Nd
    third = Nd if order == "caca" else N
    if kind == "single":
        return np.einsum("klA,lmB,mnC,nkD->ABCD", first, second, third, N)
    left = np.einsum("klA,lkB->AB", first, second)
    right = np.einsum("klC,lkD->CD", third, N)
    return np.einsum("AB,CD->ABCD", left, right)


def _spin_tensor(pattern: str) -> np.ndarray:
    e = np.eye(2)
    x, y = pattern.split(",")
    return np.einsum(f"{x.lower()},{y.lower()}->abcd", e, e)


@lru_cache(maxsize=None)
def operator_matrices() -> dict[str, np.ndarray]:
    """2->2 matrix elements of each four-baryon operator on ordered (flavor, spin) pairs.

    Single-particle index is ``2*F + s``; the two-particle index is
    ``16*i + j``.  Operators are normal ordered to ``psi^dag_a psi^dag_b psi_g psi_d``
    and antisymmetrized; the overall factor is fixed so the ``c5`` structure
    is the identity on antisymmetric two-fermion states.
    """
    out = {}
    for name, (kind, order, spin) in _OPERATORS.items():
        T = np.einsum("ABCD,abcd->AaBbCcDd", _flavor_tensor(kind, order), _spin_tensor(spin)).reshape((16,) * 4)
        # caca: psi^dag_A psi_B psi^dag_C psi_D -> psi^dag_A psi^dag_C psi_D psi_B (one-body term dropped)
        K = T.transpose(0, 2, 3, 1) if order == "caca" else T
        M = K.transpose(0, 1, 3, 2) - K - K.transpose(1, 0, 3, 2) + K.transpose(1, 0, 2, 3)
        M = M.reshape(256, 256) / 4
        M.setflags(write=False)
        out[name] = M
    return out


def vertex_matrix(w: WilsonSet, double_trace: float = 0.0) -> np.ndarray:
    """Tree-level contact potential ``sum_k c_k O_k`` as a 256x256 hermitian matrix.

    ``double_trace`` is the coefficient of the extra operator
    ``<B^dag_i B^dag_j><B_i B_j>`` that the six-operator basis eliminates.
    """
    mats = operator_matrices()
    V = sum(float(c) * mats[f"c{k + 1}"] for k, c in enumerate(w.as_tuple()))
    if double_trace:
        V = V + double_trace * mats["dt"]
    return V


# LHS - RHS of the Cayley-Hamilton relation as coefficients of (c1..c6, dt)
CAYLEY_HAMILTON = (0.5, -0.5, -1.0, 1.0, -0.5, 0.5, 0.5)


def cayley_hamilton_matrix() -> np.ndarray:
    c = CAYLEY_HAMILTON
    return vertex_matrix(WilsonSet(*c[:6]), double_trace=c[6])


def antisymmetric_projector_256() -> np.ndarray:
    P = np.zeros((256, 256))
    for i in range(16):
        for j in range(16):
            P[16 * j + i, 16 * i + j] = 1.0
    return (np.eye(256) - P) / 2


# ----------------------------------------------------------------------------
# SO(8) vector and symmetry report

# Order in which the Gell-Mann components are listed when the two diagonal
# generators are moved to the end: 1, 2, 4, 5, 6, 7, 3, 8.
LISTED_ORDER = (0, 1, 3, 4, 5, 6, 2, 7)


def so8_vector(B: np.ndarray, layout: str = "gell-mann", tol: float = 1e-12) -> np.ndarray:
    """Components ``B^a = Tr(B T^a)`` of a traceless 3x3 baryon matrix.

    ``layout="gell-mann"`` keeps the generator order so ``B = 2 sum_a B^a T^a``;
    ``layout="listed"`` moves the two diagonal components (Sigma0, Lambda) to
    slots 7 and 8.
    """
    B = np.asarray(B, dtype=complex)
    if B.shape != (3, 3):
        raise ValidationError("B must be 3x3")
    if abs(np.trace(B)) > tol:
        raise ValidationError("B must be traceless")
    vec = np.array([np.trace(B @ gell_mann(a)) for a in range(1, 9)])
    if layout == "gell-mann":
        return vec
    if layout == "listed":
        return vec[list(LISTED_ORDER)]
    raise ValueError(f"unknown layout {layout!r}")


def _close(x, y, tol, scale=1.0) -> bool:
    # relative to the overall coupling scale, so the verdict is unit-independent
    return abs(float(x) - float(y)) <= tol * scale


@dataclass(frozen=True)
class SymmetryReport:
    su6: bool
    su6_conjugate: bool
    so8: bool
    su16: bool
    su8_schrodinger: bool | None
    unitarity_limit: dict[str, bool] | None
    free: dict[str, bool]
    couplings: dict[str, float]
    wilson: dict[str, float]

    def as_dict(self) -> dict:
        return {
            "SU(6)": self.su6,
            "conjugate SU(6)": self.su6_conjugate,
            "SO(8)": self.so8,
            "SU(16)": self.su16,
            "SU(8)+Schrodinger": self.su8_schrodinger,
            "unitarity_limit": self.unitarity_limit,
            "free": self.free,
            "couplings": self.couplings,
            "wilson": self.wilson,
        }


def symmetry_report(couplings: WilsonSet | IrrepCouplings, ctx: SchemeContext, tol: float = 1e-9) -> SymmetryReport:
    """Flag the enlarged-symmetry conditions satisfied by a set of couplings."""
    if isinstance(couplings, IrrepCouplings):
        C = couplings
        w = wilson_from_irrep(C)
    else:
        w = couplings
        C = irrep_couplings(w)
    c1, c2, c3, c4, c5, c6 = (float(x) for x in w.as_tuple())
    scale = max(abs(x) for x in (c1, c2, c3, c4, c5, c6)) if any((c1, c2, c3, c4, c5, c6)) else 1.0
    su6 = _close(C.C27, C.C10bar, tol, scale)
    su6c = _close(C.C27, C.C10, tol, scale)
    chain = (c1, -c2, -c3 / 2, c4 / 2, c6)
    so8 = all(_close(chain[0], x, tol, scale) for x in chain[1:])
    su16 = all(_close(x, 0.0, tol, scale) for x in (c1, c2, c3, c4, c6))
    names = ("27", "8S", "1", "10bar", "10", "8A")
    free = {r: _close(C.get(r), 0.0, tol, scale) for r in names}
    if ctx.mu > 0:
        u = 2 * math.pi / (ctx.M * ctx.mu)
        s = max(scale, u)
        su8 = (
            all(_close(x, 0.0, tol, s) for x in (c1, c2, c3, c4))
            and _close(c5, -u, tol, s)
            and (_close(c6, u, tol, s) or _close(c6, -u, tol, s))
        )
        unit = {r: _close(C.get(r), -2 * u, tol, s) for r in names}
    else:
        su8, unit = None, None
    return SymmetryReport(su6, su6c, so8, su16, su8, unit, free, C.as_dict(), w.as_dict())
