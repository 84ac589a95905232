from __future__ import annotations

import threading

import numpy as np
import pytest

from baryon_entanglement._clebsch import CLEBSCH, LISTED_ERRATA
from baryon_entanglement.errors import EmptySectorError, NotAnEigenstateError
from baryon_entanglement.flavor_sectors import (
    SectorLabel,
    coefficient,
    conjugate_pair,
    identify_irrep,
    pair_state,
    parse_sector,
    projectors,
    realized_sectors,
    sector_kind,
    sector_members,
    sector_of,
    sector_summary,
    su3_basis,
)
from baryon_entanglement.su3_algebra import IRREPS


def test_nineteen_sectors():
    sectors = realized_sectors()
    assert len(sectors) == 19
    assert SectorLabel(0, -2) in sectors
    assert sum(len(sector_members(s)) for s in sectors) == 36


def test_sector_contents():
    assert sector_members((1, 0)) == [("n", "p")]
    assert {frozenset(p) for p in sector_members((-1, -3))} == {
        frozenset({"Sigma0", "Xi-"}),
        frozenset({"Sigma-", "Xi0"}),
        frozenset({"Lambda", "Xi-"}),
    }
    assert len(sector_members((0, -2))) == 6
    assert sector_kind((0, 0)) == "1-dim identical"
    assert sector_kind((1, 0)) == "1-dim distinct"
    assert sector_kind((0, -2)) == "6-dim"


def test_unrealized_sector():
    with pytest.raises(EmptySectorError):
        sector_members((3, 0))
    with pytest.raises(EmptySectorError):
        su3_basis((0, -5))


def test_parse_sector_forms():
    assert parse_sector("0,-1") == (0, -1)
    assert parse_sector("(1, 0)") == (1, 0)
    assert parse_sector([2, -1]) == (2, -1)
    with pytest.raises(ValueError):
        parse_sector("1")


def test_sector_of_and_conjugation():
    assert sector_of(("n", "p")) == (1, 0)
    assert sector_of(("Ξ⁻", "Ξ⁻")) == (-2, -4)
    assert conjugate_pair(("n", "Sigma-")) == ("Xi0", "Sigma+")


def test_coefficient_literal():
    assert coefficient("+1") == 1.0
    assert np.isclose(coefficient("-1/2"), -np.sqrt(0.5))
    assert np.isclose(coefficient("+9/10"), np.sqrt(0.9))


@pytest.mark.parametrize("label", realized_sectors(), ids=str)
def test_basis_orthonormal_and_complete(label):
    b = su3_basis(label)
    n_members = len(b.members)
    n_identical = sum(1 for x, y in b.members if x == y)
    assert b.dim == 2 * n_members - n_identical
    # physical states span the exchange eigenspaces; exchange-odd partners of identical pairs do not exist
    assert np.allclose(b.O @ b.O.T, np.eye(len(b.su3_states)), atol=1e-12)
    total = sum(b.projector(r) for r in b.irreps)
    assert np.allclose(total, np.eye(b.dim), atol=1e-12)
    X = b.exchange()
    assert np.allclose(X @ b.symmetric_projector(), b.symmetric_projector())
    assert np.allclose(X @ b.antisymmetric_projector(), -b.antisymmetric_projector())


def test_projectors_are_phase_insensitive():
    b = su3_basis((0, -1))
    for proj in projectors((0, -1)):
        rows = [k for k, s in enumerate(b.su3_states) if s.irrep.name == proj.irrep.name]
        flipped = b.O.copy()
        flipped[rows] *= -1
        assert np.allclose(flipped[rows].T @ flipped[rows], proj.matrix)


def test_np_sector_irreps():
    b = su3_basis((1, 0))
    assert b.irreps == ["27", "10bar"]
    s = sector_summary(SectorLabel(1, 0))
    assert s["pairs"] == ["np"] and s["kind"] == "1-dim distinct"


def test_identify_irrep_examples():
    nn = pair_state([("n", "n", 1.0)], +1)
    assert identify_irrep(nn, +1).name == "27"
    np_a = pair_state([("n", "p", 1.0)], -1)
    assert identify_irrep(np_a, -1).name == "10bar"
    ns_a = pair_state([("n", "Sigma-", 1.0)], -1)
    assert identify_irrep(ns_a, -1).name == "10"


def test_identify_irrep_rejects_mixtures():
    v = (pair_state([("n", "p", 1.0)], +1) + pair_state([("n", "p", 1.0)], -1)) / np.sqrt(2)
    with pytest.raises(NotAnEigenstateError):
        identify_irrep(v, +1)
    with pytest.raises(ValueError):
        identify_irrep(np.ones(64), +1)


def test_singlet_state():
    (row,) = CLEBSCH["1"]
    v = pair_state([(a, b, coefficient(c)) for a, b, c in row], +1)
    assert identify_irrep(v, +1).name == "1"


@pytest.mark.parametrize("irrep, row, terms", LISTED_ERRATA, ids=[f"{r}-{n}" for r, n, _ in LISTED_ERRATA])
def test_uncorrected_rows_fail_identification(irrep, row, terms):
    parity = IRREPS[irrep].exchange_parity
    v = pair_state([(a, b, coefficient(c)) for a, b, c in terms], parity)
    v = v / np.linalg.norm(v)
    try:
        found = identify_irrep(v, parity).name
    except NotAnEigenstateError:
        found = None
    assert found != irrep
    assert tuple(terms) not in CLEBSCH[irrep]


def test_cache_is_single_initialization():
    from baryon_entanglement import flavor_sectors as fs

    fs._cache.pop(SectorLabel(-1, -2), None)
    results = []
    threads = [threading.Thread(target=lambda: results.append(su3_basis((-1, -2)))) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r is results[0] for r in results)
