from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baryon_entanglement.su3_algebra import (
    ANTISYMMETRIC_IRREPS,
    IRREPS,
    SYMMETRIC_IRREPS,
    adjoint_generators,
    casimir_eigenvalues,
    casimir_operators,
    flavor_exchange,
    gell_mann,
    lowering_operators,
    octet_generators,
    structure_constants,
    tensor_generators,
    two_baryon_casimirs,
)


def test_generators_normalized_to_half():
    for a in range(1, 9):
        la = gell_mann(a)
        assert np.allclose(la, la.conj().T)
        assert abs(np.trace(la)) < 1e-15
        for b in range(1, 9):
            assert np.isclose(np.trace(la @ gell_mann(b)), 0.5 * (a == b))


@pytest.mark.parametrize("bad", [0, 9, -1])
def test_gell_mann_index_range(bad):
    with pytest.raises(ValueError):
        gell_mann(bad)


def test_structure_constant_values():
    f, d = structure_constants()
    assert np.isclose(f[0, 1, 2], 1.0)
    assert np.isclose(f[3, 4, 7], np.sqrt(3) / 2)
    assert np.isclose(d[0, 0, 7], 1 / np.sqrt(3))
    assert np.isclose(d[7, 7, 7], -1 / np.sqrt(3))
    assert not f.flags.writeable


def test_f_antisymmetric_d_symmetric():
    f, d = structure_constants()
    for perm in [(1, 0, 2), (0, 2, 1), (2, 1, 0)]:
        assert np.allclose(f, -f.transpose(perm), atol=1e-14)
        assert np.allclose(d, d.transpose(perm), atol=1e-14)


def test_jacobi_identity():
    f, _ = structure_constants()
    jac = (
        np.einsum("ade,bcd->abce", f, f)
        + np.einsum("bde,cad->abce", f, f)
        + np.einsum("cde,abd->abce", f, f)
    )
    assert np.abs(jac).max() < 1e-12


@pytest.mark.parametrize(
    "pq, expected",
    [((1, 1), (3, 0)), ((2, 2), (8, 0)), ((3, 0), (6, 9)), ((0, 3), (6, -9)), ((0, 0), (0, 0)), ((1, 0), (Fraction(4, 3), Fraction(10, 9)))],
)
def test_casimir_formula(pq, expected):
    assert casimir_eigenvalues(*pq) == expected


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6))
def test_cubic_casimir_flips_under_conjugation(p, q):
    c1, c2 = casimir_eigenvalues(p, q)
    k1, k2 = casimir_eigenvalues(q, p)
    assert c1 == k1 and c2 == -k2


def test_adjoint_generators_satisfy_algebra():
    for G in (octet_generators(), adjoint_generators()):
        f, _ = structure_constants()
        comm = np.einsum("aij,bjk->abik", G, G) - np.einsum("bij,ajk->abik", G, G)
        rhs = 1j * np.einsum("abc,cik->abik", f, G)
        assert np.abs(comm - rhs).max() < 1e-12


def test_single_octet_casimirs():
    C1, C2 = casimir_operators(octet_generators())
    assert np.allclose(C1, 3 * np.eye(8))
    assert np.allclose(C2, 0, atol=1e-12)


def test_two_baryon_casimir_spectrum():
    C1, C2 = two_baryon_casimirs()
    ev1 = np.round(np.linalg.eigvalsh(C1), 8)
    values, counts = np.unique(ev1, return_counts=True)
    assert dict(zip(values, counts)) == {0.0: 1, 3.0: 16, 6.0: 20, 8.0: 27}
    assert np.allclose(C1 @ C2, C2 @ C1)


def test_tensor_generators_commute_with_exchange():
    G = tensor_generators()
    X = flavor_exchange()
    for g in G:
        assert np.allclose(X @ g, g @ X)
    assert np.allclose(X @ X, np.eye(64))


def test_irrep_catalogue():
    assert set(SYMMETRIC_IRREPS) | set(ANTISYMMETRIC_IRREPS) == set(IRREPS)
    assert sum(IRREPS[r].dimension for r in IRREPS) == 64
    assert IRREPS["10bar"].signature == (6, -9)
    assert IRREPS["8A"].exchange_parity == -1


def test_isospin_lowering_maps_proton_to_neutron():
    from baryon_entanglement.octet import INDEX

    lower_i, _, _ = lowering_operators()
    p = np.zeros(8)
    p[INDEX["p"]] = 1
    out = lower_i @ p
    assert abs(abs(out[INDEX["n"]]) - 1) < 1e-12
    assert np.count_nonzero(np.abs(out) > 1e-12) == 1
