from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baryon_entanglement import eft_engine as eft
from baryon_entanglement.errors import BranchUnavailableError
from baryon_entanglement.flavor_sectors import realized_sectors, sector_kind
from baryon_entanglement.minimality import (
    GridAxis,
    angle_mod,
    check_sector,
    parse_axis,
    phases_from_wilson,
    rows_to_csv,
    scan,
    wilson_conditions,
)
from baryon_entanglement.smatrix import PhaseShiftSet

M = 938.9187
MU = 138.0


def test_angle_mod():
    assert angle_mod(math.pi) == pytest.approx(0.0, abs=1e-15)
    assert angle_mod(-0.1) == pytest.approx(0.1)
    assert angle_mod(3 * math.pi / 2) == pytest.approx(math.pi / 2)


def test_np_sector_identity():
    v = check_sector((1, 0), PhaseShiftSet(d27=0.3, d10bar=0.3, d8A=1.0))
    assert v.gate == "Identity" and v.routes_agree


def test_hyperon_sector_swap():
    s = 0.3
    phases = PhaseShiftSet(d27=s, d8S=s, d1=s, d10=s - math.pi / 2, d10bar=s - math.pi / 2, d8A=s - math.pi / 2)
    v = check_sector((0, -1), phases)
    assert v.gate == "SWAP"
    assert v.phase_conditions_met == {"equal": False, "swap": True}


def test_generic_phases_give_none():
    v = check_sector((0, -1), PhaseShiftSet(d27=0.7))
    assert v.gate == "none" and v.routes_agree


def test_phase_equality_is_mod_pi():
    v = check_sector((1, 0), PhaseShiftSet(d27=0.3, d10bar=0.3 + math.pi))
    assert v.gate == "Identity"


def test_global_minimum_propagates():
    phases = PhaseShiftSet.equal(0.3)
    assert check_sector((0, -2), phases).gate == "Identity"
    assert all(check_sector(label, phases).gate == "Identity" for label in realized_sectors())


# offsets are exact (0, pi/2, pi) or clearly generic; inside the tolerance band the two metrics may differ
offsets = st.one_of(st.sampled_from([0.0, math.pi / 2, math.pi, -math.pi / 2]), st.floats(1e-3, math.pi / 2 - 1e-3))


@settings(max_examples=60, deadline=None)
@given(st.floats(-3, 3, allow_nan=False), st.lists(offsets, min_size=6, max_size=6))
def test_routes_agree_away_from_tolerance_band(base, shifts):
    phases = PhaseShiftSet(*(base + s for s in shifts))
    for label in [(1, 0), (-1, -1), (0, -1), (0, -2)]:
        assert check_sector(label, phases).routes_agree


def test_wilson_row_one_equality():
    rows = {r.row: r for r in wilson_conditions(eft.WilsonSet(c2=1.0, c6=-1.0), eft.SchemeContext(M, 0.0))}
    assert rows["row1"].equality
    assert not rows["row2"].equality
    assert rows["row1"].unitarity is None


def test_su16_point_satisfies_all_equalities():
    rows = wilson_conditions(eft.WilsonSet(c5=1e-5), eft.SchemeContext(M, MU))
    assert all(r.equality for r in rows)


def test_schrodinger_point_and_swap_verdicts():
    ctx = eft.SchemeContext(M, MU)
    u = 2 * math.pi / (M * MU)
    w = eft.WilsonSet(c5=-u, c6=u)
    assert all(r.unitarity for r in wilson_conditions(w, ctx))
    phases = phases_from_wilson(w, ctx, 40.0)
    assert {phases.get(r) for r in ("27", "8S", "1")} == {math.pi / 2}
    assert {phases.get(r) for r in ("10", "10bar", "8A")} == {0.0}
    for label in realized_sectors():
        v = check_sector(label, phases)
        assert v.gate in ("SWAP", "Identity")
        # Identity and SWAP coincide on identical-flavor singlets
        assert v.gate == ("Identity" if sector_kind(label) == "1-dim identical" else "SWAP")


def test_unitarity_branch_needs_pds_scale():
    with pytest.raises(BranchUnavailableError):
        wilson_conditions(eft.WilsonSet(), eft.SchemeContext(M, 0.0), branch="unitarity")
    with pytest.raises(ValueError):
        wilson_conditions(eft.WilsonSet(), eft.SchemeContext(M, MU), branch="sideways")


def test_distance_is_scale_aware():
    a = {r.row: r for r in wilson_conditions(eft.WilsonSet(c2=1.0, c6=-0.9), eft.SchemeContext(M))}
    b = {r.row: r for r in wilson_conditions(eft.WilsonSet(c2=1e-6, c6=-0.9e-6), eft.SchemeContext(M))}
    assert a["row1"].equality_distance == pytest.approx(b["row1"].equality_distance)


def test_parse_axis():
    assert parse_axis("d27=0:1:5") == GridAxis("d27", 0.0, 1.0, 5)
    with pytest.raises(ValueError):
        parse_axis("d27=0:1")


def test_epower_scan_minima():
    rows = scan((1, 0), [GridAxis("d10bar", 0.0, math.pi, 9)], metrics=["epower"], samples=4000, seed=3)
    ep = np.array([r["epower"] for r in rows])
    grid = np.array([r["d10bar"] for r in rows])
    minima = grid[ep < 1e-10]
    assert set(np.round(minima, 6)) == set(np.round([0.0, math.pi / 2, math.pi], 6))
    assert ep.max() == pytest.approx(1 / 6, abs=0.01)


def test_wilson_scan_minimum_at_origin():
    axes = [GridAxis("c1", -1e-6, 1e-6, 5), GridAxis("c2", -1e-6, 1e-6, 5)]
    rows = scan((0, -2), axes, base=eft.WilsonSet(c5=1e-5), ctx=eft.SchemeContext(M, MU), p=50.0)
    best = min(rows, key=lambda r: r["residual_I"])
    assert best["c1"] == 0.0 and best["c2"] == 0.0
    assert best["residual_I"] < 1e-12


def test_scan_is_deterministic_and_ordered():
    axes = [GridAxis("d27", 0.0, 1.0, 3), GridAxis("d8A", 0.0, 1.0, 2)]
    a = rows_to_csv(scan((0, -1), axes, metrics=["residual_I", "epower"], samples=500, seed=9, workers=1))
    b = rows_to_csv(scan((0, -1), axes, metrics=["residual_I", "epower"], samples=500, seed=9, workers=4))
    assert a == b
    lines = a.splitlines()
    assert lines[0].startswith("d27,d8A,residual_I,residual_SWAP,gate,epower")
    assert [tuple(map(float, ln.split(",")[:2])) for ln in lines[1:]] == [(x, y) for x in (0.0, 0.5, 1.0) for y in (0.0, 1.0)]


def test_scan_rejects_bad_input():
    with pytest.raises(ValueError):
        scan((1, 0), [GridAxis("d27", 0, 1, 2)], metrics=["entropy"])
    with pytest.raises(ValueError):
        scan((1, 0), [GridAxis("c1", 0, 1, 2)])


@pytest.mark.parametrize("a, b", [(1e-5, 2e-5), (-3e-5, 1e-5), (0.0, 4e-5)])
def test_su6_point_gives_identity_in_np_class_sectors(a, b):
    ctx = eft.SchemeContext(M, 0.0)
    phases = phases_from_wilson(eft.su6_wilson(a, b), ctx, 50.0)
    for label in [(1, 0), (-2, -3), (1, -3)]:
        assert check_sector(label, phases).gate == "Identity"
    # the conjugate class needs C_27 = C_10, which SU(6) breaks by 8b/27
    for label in [(-1, -1), (2, -1), (-1, -4)]:
        assert check_sector(label, phases).gate == "none"
