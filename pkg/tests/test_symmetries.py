from fractions import Fraction

import pytest
from hypothesis import given, settings

from bhcr.delsarte import parse_delsarte
from bhcr.errors import DimensionMismatch, EnumerationCapExceeded, InputError, NonCalabiYau, NotAMember
from bhcr.fixtures import elliptic_table, table_row
from bhcr.symmetries import (
    SLTILDE,
    DiagonalSymmetry,
    all_subgroups,
    aut_group,
    coset_representative,
    element_order,
    in_aut,
    j_element,
    parse_generators,
    representatives_in_coset,
    sl_group,
    sl_tilde,
    subgroup_generated,
)
from bhcr.weights import is_calabi_yau, weight_system
from oracles import brute_aut, sl_orbits
from test_delsarte import invertible_potentials

F = Fraction
D = DiagonalSymmetry.parse


def test_phase_arithmetic():
    g = D("1/4,3/4,0")
    assert g + g == D("1/2,1/2,0")
    assert -g == D("3/4,1/4,0")
    assert g * 4 == DiagonalSymmetry.identity(3)
    assert g.order() == element_order(g) == 4
    assert g.is_special()
    assert not D("1/4,0,0").is_special()
    with pytest.raises(DimensionMismatch):
        g + D("1/2,1/2")


def test_parse_rejects_garbage():
    with pytest.raises(InputError):
        D("1/0,1")
    assert parse_generators("1/2,0,1/2; 0,1/4,3/4") == [D("1/2,0,1/2"), D("0,1/4,3/4")]
    assert parse_generators(None) == []


def test_j_of_table_rows():
    assert j_element(table_row(6).potential) == D("1/2,1/4,1/4")
    assert j_element(table_row(11).potential).order() == 6


def test_aut_matches_brute_force_on_table():
    for row in elliptic_table():
        p = row.potential
        G = aut_group(p)
        assert G.element_set() == {DiagonalSymmetry(v) for v in brute_aut(p.exponents)}
        assert G.order == abs(p.determinant)


def test_sl_orders_from_table():
    for row in elliptic_table():
        assert sl_group(row.potential).order == row.sl_order
        assert sl_tilde(row.potential).order == row.sl_tilde_order


def test_row6_sl_tilde_elements():
    G = sl_tilde(table_row(6).potential)
    assert G.order == 2
    assert D("0,1/4,3/4") in G
    assert D("1/2,0,1/2") in G
    # the two representatives name the same class
    assert G.canonical(D("0,1/4,3/4")) == G.canonical(D("1/2,0,1/2"))


def test_coset_representative_is_well_defined():
    p = table_row(6).potential
    j = j_element(p)
    g = D("0,1/4,3/4")
    reps = representatives_in_coset(p, g)
    assert len(reps) == 4
    assert {coset_representative(p, h) for h in reps} == {min(reps)}
    assert coset_representative(p, g + j) == coset_representative(p, g)


def test_in_aut():
    p = table_row(6).potential
    assert in_aut(p, D("1/2,1/4,0"))
    assert not in_aut(p, D("1/3,0,0"))


def test_subgroup_generated_and_membership_errors():
    G = sl_tilde(table_row(6).potential)
    H = subgroup_generated(G, [D("1/2,0,1/2")])
    assert H.order == 2 and H.is_subgroup_of(G)
    assert subgroup_generated(G, []).order == 1
    with pytest.raises(NotAMember):
        subgroup_generated(G, [D("1/4,0,0")])


def test_all_subgroups_of_fermat_quartic_surface():
    p = parse_delsarte("y0^4+y1^4+y2^4+y3^4")
    G = sl_tilde(p)
    assert G.order == 16
    subs = all_subgroups(G)
    # (Z/4)^2 has 15 subgroups
    assert len(subs) == 15
    assert all(G.order % H.order == 0 for H in subs)


def test_sl_tilde_requires_calabi_yau():
    with pytest.raises(NonCalabiYau):
        sl_tilde(parse_delsarte("x0^3+x1^3+x2^3+x3^3"))


def test_enumeration_cap(monkeypatch):
    p = parse_delsarte("x0^7+x1^7+x2^7")
    with pytest.raises(EnumerationCapExceeded):
        aut_group(p, cap=100)
    monkeypatch.setenv("BHCR_ENUM_CAP", "10")
    with pytest.raises(EnumerationCapExceeded):
        sl_tilde(table_row(6).potential)


@settings(max_examples=40, deadline=None)
@given(invertible_potentials(max_n=4))
def test_group_orders_against_brute_force(p):
    if abs(p.determinant) ** p.n > 200_000:
        return
    aut = brute_aut(p.exponents)
    assert aut_group(p).element_set() == {DiagonalSymmetry(v) for v in aut}
    sl = {v for v in aut if sum(v) % 1 == 0}
    SL = sl_group(p)
    assert SL.element_set() == {DiagonalSymmetry(v) for v in sl}
    assert SL.order * weight_system(p.transpose()).degree == abs(p.determinant)
    ws = weight_system(p)
    if is_calabi_yau(ws):
        orbits = sl_orbits(sl, ws.charges)
        G = sl_tilde(p)
        assert G.kind == SLTILDE
        assert G.order == len(orbits)
        assert G.order * ws.degree * weight_system(p.transpose()).degree == abs(p.determinant)
        assert {min(DiagonalSymmetry(v) for v in o) for o in orbits} == G.element_set()
