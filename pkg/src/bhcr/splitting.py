"""The splitting isomorphism SL(W_{E,S})/J -> SL(W_E)/J x SL(W_S)/J.

In phase language a class of the product has a representative ``(alpha, beta)``
whose curve block and surface block both have integral phase sum; prepending
a zero phase to each block gives the two factor classes.  The inverse lifts
each factor class to a representative with first phase 0 and drops it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .duality import transposed_group
from .errors import (
    InternalError,
    NoDeterminantOneRepresentative,
    NotAMember,
    NotASubgroup,
    NotInImage,
)
from .symmetries import (
    SLTILDE,
    DiagonalSymmetry,
    SymmetryGroup,
    coset_representative,
    j_element,
    representatives_in_coset,
    sl_group,
    sl_tilde,
)
from .twist import TwistModel, transposed_model


@dataclass(frozen=True, order=True)
class SplitElement:
    curve_part: DiagonalSymmetry
    surface_part: DiagonalSymmetry

    def __str__(self) -> str:
        return f"({self.curve_part}, {self.surface_part})"


def _block_sums_integral(v: DiagonalSymmetry, m: int) -> bool:
    return sum(v.phases[:m]).denominator == 1 and sum(v.phases[m:]).denominator == 1


def split_representative(model: TwistModel, g: DiagonalSymmetry) -> DiagonalSymmetry:
    """Least representative of the class of ``g`` with both block sums integral."""
    p = model.product_potential
    m = model.m
    good = [v for v in representatives_in_coset(p, g) if _block_sums_integral(v, m)]
    if not good:
        raise NoDeterminantOneRepresentative(f"class of {g} has no block-wise special representative")
    return min(good)


def theta(model: TwistModel, g: DiagonalSymmetry) -> SplitElement:
    group = sl_tilde(model.product_potential)
    if g not in group:
        raise NotAMember(f"{g} is not in SL(W)/J of {model.product_potential}")
    rep = split_representative(model, g)
    m = model.m
    zero = (Fraction(0),)
    curve = coset_representative(model.curve_potential, DiagonalSymmetry(zero + rep.phases[:m]))
    surface = coset_representative(model.surface_potential, DiagonalSymmetry(zero + rep.phases[m:]))
    return SplitElement(curve, surface)


def _lift_first_phase_zero(p, g: DiagonalSymmetry) -> DiagonalSymmetry:
    for v in representatives_in_coset(p, g):
        if v.phases[0] == 0:
            return v
    raise NotInImage(f"class of {g} has no representative with first phase 0")


def theta_inverse(model: TwistModel, se: SplitElement) -> DiagonalSymmetry:
    E, S, P = model.curve_potential, model.surface_potential, model.product_potential
    if se.curve_part not in sl_tilde(E):
        raise NotAMember(f"{se.curve_part} is not in SL(W_E)/J")
    if se.surface_part not in sl_tilde(S):
        raise NotAMember(f"{se.surface_part} is not in SL(W_S)/J")
    a = _lift_first_phase_zero(E, se.curve_part)
    b = _lift_first_phase_zero(S, se.surface_part)
    v = DiagonalSymmetry(a.phases[1:] + b.phases[1:])
    if v not in sl_group(P):
        raise NotInImage(f"{v} is not in SL(W_ES)")
    return coset_representative(P, v)


def psi(model: TwistModel, g: DiagonalSymmetry, sign: int) -> tuple[DiagonalSymmetry, DiagonalSymmetry]:
    """The isomorphism ``SL(W_ES) x {+-1} -> SL(W_E) x SL(W_S)`` before quotienting.

    ``g`` is an element of SL(W_ES) (not a class).  Each block is completed by
    a first phase in {0, 1/2} to determinant one; for ``sign == -1`` the
    section ``(j_E^u0, id)`` (u0 odd) or ``(id, j_S^v0)`` (v0 odd) is added.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    m = model.m
    alpha, beta = g.phases[:m], g.phases[m:]
    a0 = (-sum(alpha)) % 1
    b0 = (-sum(beta)) % 1
    if a0 not in (0, Fraction(1, 2)) or b0 not in (0, Fraction(1, 2)) or a0 != b0:
        raise InternalError(f"{g} has block determinants outside +-1")
    a = DiagonalSymmetry((a0,) + alpha)
    b = DiagonalSymmetry((b0,) + beta)
    if sign == -1:
        u0, v0 = model.parameters.u0, model.parameters.v0
        if u0 % 2:
            a = a + u0 * j_element(model.curve_potential)
        else:
            b = b + v0 * j_element(model.surface_potential)
    return a, b


def _check_factor_group(G: SymmetryGroup, p, role: str):
    if G.kind != SLTILDE or G.potential != p:
        raise NotASubgroup(f"{role} group must be a subgroup of SL(W)/J of {p}")
    if not G.is_subgroup_of(sl_tilde(p)):
        raise NotASubgroup(f"{role} group is not contained in SL(W)/J of {p}")


def product_group(model: TwistModel, G_E: SymmetryGroup, G_S: SymmetryGroup) -> SymmetryGroup:
    """``theta^{-1}(G_E x G_S)`` inside SL(W_ES)/J."""
    _check_factor_group(G_E, model.curve_potential, "curve")
    _check_factor_group(G_S, model.surface_potential, "surface")
    elems = [theta_inverse(model, SplitElement(a, b)) for a in G_E for b in G_S]
    out = SymmetryGroup(model.product_potential, SLTILDE, tuple(elems))
    if out.order != G_E.order * G_S.order:
        raise InternalError("theta^{-1} is not injective on G_E x G_S")
    return out


@dataclass(frozen=True)
class SplittingCertificate:
    holds: bool
    transposed_product_group: SymmetryGroup
    lhs: frozenset  # theta^T(G_ES^T)
    rhs: frozenset  # G_E^T x G_S^T


def verify_transposed_splitting(model: TwistModel, G_E: SymmetryGroup, G_S: SymmetryGroup) -> SplittingCertificate:
    """Compare ``theta^T(G_ES^T)`` with ``G_E^T x G_S^T`` element by element."""
    tmodel = transposed_model(model)
    if tmodel.product_potential != model.product_potential.transpose():
        raise InternalError("transposed factors do not glue to the transposed product")
    G_ES_T = transposed_group(product_group(model, G_E, G_S))
    lhs = frozenset(theta(tmodel, u) for u in G_ES_T)
    rhs = frozenset(SplitElement(a, b) for a in transposed_group(G_E) for b in transposed_group(G_S))
    return SplittingCertificate(lhs == rhs, G_ES_T, lhs, rhs)
