import itertools

import pytest

from bhcr.errors import NotAMember, NotASubgroup
from bhcr.fixtures import twist_fixture_models, worked_example_model
from bhcr.splitting import (
    SplitElement,
    product_group,
    psi,
    split_representative,
    theta,
    theta_inverse,
    verify_transposed_splitting,
)
from bhcr.symmetries import DiagonalSymmetry, all_subgroups, sl_group, sl_tilde
from bhcr.twist import transposed_model

D = DiagonalSymmetry.parse
MODELS = twist_fixture_models()


def test_theta_on_worked_example():
    m = worked_example_model()
    tm = transposed_model(m)
    nu = D("1/4,3/4,0,0,0")
    assert nu in sl_tilde(tm.product_potential)
    assert split_representative(tm, nu) == nu
    se = theta(tm, nu)
    assert se.curve_part == sl_tilde(tm.curve_potential).canonical(D("0,1/4,3/4"))
    assert se.surface_part == DiagonalSymmetry.identity(4)


def test_theta_identity():
    m = worked_example_model()
    e = theta(m, DiagonalSymmetry.identity(5))
    assert e == SplitElement(DiagonalSymmetry.identity(3), DiagonalSymmetry.identity(4))


def test_theta_rejects_non_members():
    with pytest.raises(NotAMember):
        theta(worked_example_model(), D("1/3,0,0,0,0"))


@pytest.mark.parametrize("name", sorted(MODELS))
def test_theta_is_an_isomorphism(name):
    m = MODELS[name]
    P, E, S = sl_tilde(m.product_potential), sl_tilde(m.curve_potential), sl_tilde(m.surface_potential)
    images = {g: theta(m, g) for g in P}
    assert len(set(images.values())) == P.order == E.order * S.order
    for g, h in itertools.product(P, repeat=2):
        gh = images[P.multiply(g, h)]
        assert gh.curve_part == E.multiply(images[g].curve_part, images[h].curve_part)
        assert gh.surface_part == S.multiply(images[g].surface_part, images[h].surface_part)
    for g, se in images.items():
        assert theta_inverse(m, se) == g


@pytest.mark.parametrize("name", ["worked-example", "fermat-5-5-10", "cubic-loop-3-9-7"])
def test_psi_is_injective_with_determinant_one_blocks(name):
    m = MODELS[name]
    seen = set()
    for g in sl_group(m.product_potential):
        for sign in (1, -1):
            a, b = psi(m, g, sign)
            assert a.is_special() and b.is_special()
            seen.add((a, b))
    assert len(seen) == 2 * sl_group(m.product_potential).order


def test_psi_sign_check():
    with pytest.raises(ValueError):
        psi(worked_example_model(), DiagonalSymmetry.identity(5), 0)


def test_product_group_checks_inputs():
    m = worked_example_model()
    G_E = sl_tilde(m.curve_potential)
    with pytest.raises(NotASubgroup):
        product_group(m, G_E, G_E)


@pytest.mark.parametrize("name", sorted(MODELS))
def test_transposed_splitting_for_every_subgroup_pair(name):
    m = MODELS[name]
    for G_E in all_subgroups(sl_tilde(m.curve_potential)):
        for G_S in all_subgroups(sl_tilde(m.surface_potential)):
            cert = verify_transposed_splitting(m, G_E, G_S)
            assert cert.holds, (G_E.elements, G_S.elements)
            assert cert.transposed_product_group.order * G_E.order * G_S.order == \
                sl_tilde(m.product_potential).order
