"""The Q/Z pairing between SL(W^T)/J and SL(W)/J, and transposed groups."""

from __future__ import annotations

from fractions import Fraction

from .delsarte import DelsartePolynomial
from .errors import DimensionMismatch, InputError
from .symmetries import SLTILDE, DiagonalSymmetry, SymmetryGroup, sl_tilde


def pairing(u: DiagonalSymmetry, v: DiagonalSymmetry, p: DelsartePolynomial) -> Fraction:
    """``u^T A v mod 1`` where ``A`` is the exponent matrix of ``p``.

    ``u`` lives on the transposed side (``W^T``) and ``v`` on ``W``.
    """
    n = p.n
    if u.n != n or v.n != n:
        raise DimensionMismatch(f"pairing on {n} variables got {u.n} and {v.n} phases")
    A = p.exponents
    total = sum(
        (u.phases[i] * A[i][j] * v.phases[j] for i in range(n) for j in range(n) if A[i][j]),
        Fraction(0),
    )
    return total % 1


def transposed_group(G: SymmetryGroup) -> SymmetryGroup:
    """Orthogonal complement of ``G`` inside SL(W^T)/J_{W^T}."""
    if G.kind != SLTILDE:
        raise InputError(f"transposed groups are defined for SL/J subgroups, not {G.kind}")
    p = G.potential
    dual = sl_tilde(p.transpose())
    elems = [u for u in dual if all(pairing(u, v, p) == 0 for v in G)]
    return SymmetryGroup(dual.potential, SLTILDE, tuple(elems))
