"""Diagonal symmetry groups Aut(W), SL(W), J_W and SL(W)/J_W.

A diagonal symmetry ``diag(exp(2 pi i v_j))`` is stored as its phase vector
``v`` reduced into ``[0, 1)``.  Aut(W) is ``A^{-1} Z^n / Z^n``; SL(W) is the
subset with integral phase sum; J_W is generated by the charge vector.
Elements of the quotient SL(W)/J_W are represented by the lexicographically
least phase vector in their coset.

Groups are enumerated explicitly.  Internally the phases are integers modulo
``N = |det A|``, which is a common denominator for all of ``A^{-1} Z^n``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Iterator, Sequence

from . import linalg
from .delsarte import DelsartePolynomial
from .errors import (
    DimensionMismatch,
    EnumerationCapExceeded,
    InputError,
    NonCalabiYau,
    NotAMember,
    OrderFormulaMismatch,
)
from .weights import charges, is_calabi_yau, weight_system

DEFAULT_ENUM_CAP = 10**6

AUT = "Aut"
SL = "SL"
SLTILDE = "SLtilde"


def enumeration_cap() -> int:
    raw = os.environ.get("BHCR_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


@dataclass(frozen=True, order=True)
class DiagonalSymmetry:
    phases: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "phases", tuple(Fraction(x) % 1 for x in self.phases))

    @classmethod
    def identity(cls, n: int) -> "DiagonalSymmetry":
        return cls((Fraction(0),) * n)

    @classmethod
    def parse(cls, text: str) -> "DiagonalSymmetry":
        """Parse ``"1/4,3/4,0"``."""
        try:
            return cls(tuple(Fraction(t.strip()) for t in text.split(",")))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad phase vector {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.phases)

    def __add__(self, other: "DiagonalSymmetry") -> "DiagonalSymmetry":
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n} vs {other.n} phases")
        return DiagonalSymmetry(tuple(a + b for a, b in zip(self.phases, other.phases)))

    def __neg__(self) -> "DiagonalSymmetry":
        return DiagonalSymmetry(tuple(-a for a in self.phases))

    def __sub__(self, other: "DiagonalSymmetry") -> "DiagonalSymmetry":
        return self + (-other)

    def __mul__(self, k: int) -> "DiagonalSymmetry":
        return DiagonalSymmetry(tuple(k * a for a in self.phases))

    __rmul__ = __mul__

    def is_identity(self) -> bool:
        return not any(self.phases)

    def is_special(self) -> bool:
        """Determinant one, i.e. integral phase sum."""
        return sum(self.phases).denominator == 1

    def order(self) -> int:
        return element_order(self)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.phases) + ")"

    def to_strings(self) -> list[str]:
        return [str(x) for x in self.phases]


def element_order(g: DiagonalSymmetry) -> int:
    return lcm(*(x.denominator for x in g.phases)) if g.phases else 1


def j_element(p: DelsartePolynomial) -> DiagonalSymmetry:
    return DiagonalSymmetry(charges(p))


def in_aut(p: DelsartePolynomial, g: DiagonalSymmetry) -> bool:
    if g.n != p.n:
        return False
    return all(Fraction(x).denominator == 1 for x in linalg.matvec(p.exponents, g.phases))


# ----------------------------------------------------------- integer model

class _PhaseLattice:
    """``A^{-1} Z^n / Z^n`` as integer vectors modulo ``N = |det A|``."""

    def __init__(self, p: DelsartePolynomial):
        d = p.determinant
        self.n = p.n
        self.N = abs(d)
        sign = 1 if d > 0 else -1
        adj = linalg.adjugate(p.exponents)
        # columns of N * A^{-1}
        self.generators = [
            tuple((sign * adj[i][j]) % self.N for i in range(self.n)) for j in range(self.n)
        ]
        self.q = tuple(sum(sign * x for x in row) % self.N for row in adj)

    def to_symmetry(self, v) -> DiagonalSymmetry:
        return DiagonalSymmetry(tuple(Fraction(x, self.N) for x in v))

    def from_symmetry(self, g: DiagonalSymmetry):
        out = []
        for x in g.phases:
            y = x * self.N
            if y.denominator != 1:
                return None
            out.append(int(y))
        return tuple(out)

    def add(self, a, b):
        N = self.N
        return tuple((x + y) % N for x, y in zip(a, b))

    def closure(self, gens) -> set:
        zero = (0,) * self.n
        group = {zero}
        for g in gens:
            if g in group:
                continue
            new = set(group)
            m = g
            while m not in group:
                new.update(self.add(h, m) for h in group)
                m = self.add(m, g)
            group = new
        return group

    def coset_rep(self, v, d: int):
        best = v
        cur = v
        for _ in range(d - 1):
            cur = self.add(cur, self.q)
            if cur < best:
                best = cur
        return best


@lru_cache(maxsize=64)
def _lattice(p: DelsartePolynomial) -> _PhaseLattice:
    return _PhaseLattice(p)


# ------------------------------------------------------------------ groups

@dataclass(frozen=True)
class SymmetryGroup:
    """An explicitly enumerated finite abelian group of diagonal symmetries.

    For ``kind == SLTILDE`` the elements are canonical coset representatives
    of SL(W)/J_W; the group law is addition followed by re-canonicalisation.
    """

    potential: DelsartePolynomial
    kind: str
    elements: tuple[DiagonalSymmetry, ...]
    generators: tuple[DiagonalSymmetry, ...] = ()
    _members: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_members", frozenset(elems))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[DiagonalSymmetry]:
        return iter(self.elements)

    def __contains__(self, g: DiagonalSymmetry) -> bool:
        try:
            return self.canonical(g) in self._members
        except DimensionMismatch:
            return False

    def element_set(self) -> frozenset:
        return self._members

    def identity(self) -> DiagonalSymmetry:
        return DiagonalSymmetry.identity(self.potential.n)

    def canonical(self, g: DiagonalSymmetry) -> DiagonalSymmetry:
        if g.n != self.potential.n:
            raise DimensionMismatch(f"expected {self.potential.n} phases, got {g.n}")
        if self.kind != SLTILDE:
            return g
        return coset_representative(self.potential, g)

    def multiply(self, g: DiagonalSymmetry, h: DiagonalSymmetry) -> DiagonalSymmetry:
        return self.canonical(g + h)

    def is_subgroup_of(self, other: "SymmetryGroup") -> bool:
        return self._members <= other._members


def coset_representative(p: DelsartePolynomial, g: DiagonalSymmetry) -> DiagonalSymmetry:
    """Least element of ``g + <q>`` in lexicographic order."""
    lat = _lattice(p)
    v = lat.from_symmetry(g)
    d = weight_system(p).degree
    if v is None:
        # not in Aut(W); still well defined on phases
        j = j_element(p)
        return min(g + k * j for k in range(d))
    return lat.to_symmetry(lat.coset_rep(v, d))


def _check_cap(p: DelsartePolynomial, cap: int | None):
    cap = enumeration_cap() if cap is None else cap
    if abs(p.determinant) > cap:
        raise EnumerationCapExceeded(f"|det A| = {abs(p.determinant)} exceeds the cap {cap}")


@lru_cache(maxsize=128)
def _aut_vectors(p: DelsartePolynomial) -> frozenset:
    lat = _lattice(p)
    return frozenset(lat.closure(lat.generators))


def aut_group(p: DelsartePolynomial, cap: int | None = None) -> SymmetryGroup:
    _check_cap(p, cap)
    lat = _lattice(p)
    elems = _aut_vectors(p)
    if len(elems) != lat.N:
        raise OrderFormulaMismatch(f"|Aut| = {len(elems)} but |det A| = {lat.N}")
    gens = tuple(lat.to_symmetry(g) for g in lat.generators)
    return SymmetryGroup(p, AUT, tuple(lat.to_symmetry(v) for v in elems), gens)


def _sl_vectors(p: DelsartePolynomial):
    lat = _lattice(p)
    return [v for v in _aut_vectors(p) if sum(v) % lat.N == 0]


def sl_group(p: DelsartePolynomial, cap: int | None = None) -> SymmetryGroup:
    _check_cap(p, cap)
    lat = _lattice(p)
    elems = _sl_vectors(p)
    expected = lat.N // weight_system(p.transpose()).degree
    if len(elems) != expected or lat.N % weight_system(p.transpose()).degree:
        raise OrderFormulaMismatch(f"|SL(W)| = {len(elems)}, formula gives {expected}")
    return SymmetryGroup(p, SL, tuple(lat.to_symmetry(v) for v in elems))


def sl_tilde(p: DelsartePolynomial, cap: int | None = None) -> SymmetryGroup:
    _check_cap(p, cap)
    return _sl_tilde(p)


@lru_cache(maxsize=128)
def _sl_tilde(p: DelsartePolynomial) -> SymmetryGroup:
    lat = _lattice(p)
    ws = weight_system(p)
    if not is_calabi_yau(ws):
        raise NonCalabiYau(f"J_W is not inside SL(W) for {p} in {ws}")
    d = ws.degree
    dt = weight_system(p.transpose()).degree
    reps = {lat.coset_rep(v, d) for v in _sl_vectors(p)}
    if len(reps) * d * dt != lat.N:
        raise OrderFormulaMismatch(
            f"|SL(W)/J_W| = {len(reps)}, formula gives {Fraction(lat.N, d * dt)}"
        )
    return SymmetryGroup(p, SLTILDE, tuple(lat.to_symmetry(v) for v in reps))


def j_group(p: DelsartePolynomial) -> SymmetryGroup:
    j = j_element(p)
    return SymmetryGroup(p, SL if j.is_special() else AUT, tuple(k * j for k in range(j.order())), (j,))


def subgroup_generated(group: SymmetryGroup, gens: Iterable[DiagonalSymmetry]) -> SymmetryGroup:
    """Closure of ``gens`` inside ``group``."""
    canon = []
    for g in gens:
        c = group.canonical(g)
        if c not in group.element_set():
            raise NotAMember(f"{g} is not in {group.kind}({group.potential})")
        canon.append(c)
    elems = {group.identity()}
    for g in canon:
        if g in elems:
            continue
        new = set(elems)
        m = g
        while m not in elems:
            new.update(group.multiply(h, m) for h in elems)
            m = group.multiply(m, g)
        elems = new
    return SymmetryGroup(group.potential, group.kind, tuple(elems), tuple(canon))


def all_subgroups(group: SymmetryGroup) -> list[SymmetryGroup]:
    """Every subgroup, found by adjoining one element at a time."""
    trivial = subgroup_generated(group, [])
    found = {trivial.element_set(): trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for h in frontier:
            for g in group:
                if g in h.element_set():
                    continue
                k = subgroup_generated(group, list(h.generators) + [g])
                if k.element_set() not in found:
                    found[k.element_set()] = k
                    nxt.append(k)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (s.order, s.elements))


def representatives_in_coset(p: DelsartePolynomial, g: DiagonalSymmetry) -> list[DiagonalSymmetry]:
    """All phase vectors ``g + k q`` for ``k`` in ``range(d)``."""
    j = j_element(p)
    return [g + k * j for k in range(weight_system(p).degree)]


def parse_generators(text: str | Sequence[str] | None) -> list[DiagonalSymmetry]:
    """``"1/2,0,1/2;0,1/4,3/4"`` -> two symmetries."""
    if not text:
        return []
    parts = text.split(";") if isinstance(text, str) else list(text)
    return [DiagonalSymmetry.parse(s) for s in parts if s.strip()]
