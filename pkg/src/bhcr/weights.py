"""Charges, weights and degree of a Delsarte potential."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .delsarte import DelsartePolynomial
from .errors import NonPositiveCharge


@dataclass(frozen=True)
class WeightSystem:
    """``weights = degree * charges`` with ``degree`` minimal."""

    charges: tuple[Fraction, ...]
    weights: tuple[int, ...]
    degree: int

    @property
    def n(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return f"P({','.join(map(str, self.weights))}) degree {self.degree}"


def charges(p: DelsartePolynomial) -> tuple[Fraction, ...]:
    """``A^{-1} 1`` in exact arithmetic."""
    inv = linalg.inverse(p.exponents)
    return tuple(sum(row, Fraction(0)) for row in inv)


def weight_system(p: DelsartePolynomial) -> WeightSystem:
    q = charges(p)
    if any(c <= 0 for c in q):
        raise NonPositiveCharge(f"charges {tuple(map(str, q))} of {p} are not all positive")
    d = linalg.denominator_lcm(q)
    w = tuple(int(c * d) for c in q)
    return WeightSystem(q, w, d)


def is_normalized(ws: WeightSystem | tuple[int, ...]) -> bool:
    """True when every n-1 of the weights are coprime."""
    w = ws.weights if isinstance(ws, WeightSystem) else tuple(ws)
    if len(w) == 1:
        return True
    return all(gcd(*(w[:i] + w[i + 1:])) == 1 for i in range(len(w)))


def is_calabi_yau(ws: WeightSystem) -> bool:
    return sum(ws.weights) == ws.degree


def degrees_of_monomials(p: DelsartePolynomial, ws: WeightSystem) -> tuple[int, ...]:
    return linalg.matvec(p.exponents, ws.weights)
