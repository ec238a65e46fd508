"""Nikulin triples and Borcea-Voisin threefold invariants (involution case)."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import ExceptionalTriple, MirrorUndefined, OutOfRange, ParityViolation

EXCEPTIONAL = frozenset({(10, 8, 0), (10, 10, 0)})
NO_MIRROR = (14, 6, 0)
BAD_TRIPLES = frozenset({(2, 0, 0), (18, 0, 0), (4, 4, 1), (16, 4, 1)})


@dataclass(frozen=True, order=True)
class NikulinTriple:
    r: int
    a: int
    delta: int

    def __post_init__(self):
        r, a, delta = self.r, self.a, self.delta
        if not 1 <= r <= 20:
            raise OutOfRange(f"r = {r} not in [1, 20]")
        if a < 0:
            raise OutOfRange(f"a = {a} is negative")
        if delta not in (0, 1):
            raise OutOfRange(f"delta = {delta} not in {{0, 1}}")
        if (r - a) % 2:
            raise ParityViolation(f"r - a = {r - a} is odd")
        if a > r or r + a > 22:
            raise OutOfRange(f"(r, a) = ({r}, {a}) violates a <= r and r + a <= 22")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r, self.a, self.delta)

    def __str__(self) -> str:
        return f"({self.r},{self.a},{self.delta})"


@dataclass(frozen=True)
class BorceaVoisinInvariants:
    genus: int | None
    rational_count: int | None
    h11: int
    h21: int


def fixed_locus(t: NikulinTriple) -> tuple[int, int]:
    """Genus ``g`` of the big fixed curve and number ``k`` of fixed rational curves."""
    if t.as_tuple() in EXCEPTIONAL:
        raise ExceptionalTriple(f"{t}: fixed locus is not C_g + k rational curves")
    g2, k2 = 22 - t.r - t.a, t.r - t.a
    if g2 % 2 or k2 % 2 or g2 < 0 or k2 < 0:
        raise ParityViolation(f"{t}: 2g = {g2}, 2k = {k2}")
    return g2 // 2, k2 // 2


def triple_from_fixed_locus(g: int, k: int) -> tuple[int, int]:
    if g < 0 or k < 0 or g + k > 11:
        raise OutOfRange(f"(g, k) = ({g}, {k}) needs g, k >= 0 and g + k <= 11")
    r, a = 11 - g + k, 11 - g - k
    if r < 1:
        raise OutOfRange(f"(g, k) = ({g}, {k}) gives r = {r} < 1")
    return r, a


def hodge_numbers(t: NikulinTriple) -> tuple[int, int]:
    return 5 + 3 * t.r - 2 * t.a, 65 - 3 * t.r - 2 * t.a


def invariants(t: NikulinTriple) -> BorceaVoisinInvariants:
    try:
        g, k = fixed_locus(t)
    except ExceptionalTriple:
        g = k = None
    h11, h21 = hodge_numbers(t)
    return BorceaVoisinInvariants(g, k, h11, h21)


def mirror_defined(t: NikulinTriple) -> bool:
    return t.as_tuple() != NO_MIRROR and t.r + t.a <= 20


def lattice_mirror(t: NikulinTriple) -> NikulinTriple:
    if not mirror_defined(t):
        raise MirrorUndefined(f"{t}: lattice mirror needs r + a <= 20 and t != (14,6,0)")
    return NikulinTriple(20 - t.r, t.a, t.delta)


def hodge_swap_check(t: NikulinTriple) -> bool:
    h11, h21 = hodge_numbers(t)
    m11, m21 = hodge_numbers(lattice_mirror(t))
    return h11 == m21 and h21 == m11


# ------------------------------------------------------------------ catalog

class Availability(str, enum.Enum):
    AVAILABLE = "Available"
    NOT_AVAILABLE = "NotAvailable"
    NO_DELSARTE_MODEL = "NoDelsarteModel"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CatalogEntry:
    triple: NikulinTriple
    flags: frozenset[str]

    @property
    def eligible(self) -> bool:
        return "eligible" in self.flags

    @property
    def has_model(self) -> bool:
        return "model" in self.flags

    @property
    def theorem(self) -> bool:
        return "theorem" in self.flags

    @property
    def bad(self) -> bool:
        return "bad" in self.flags


def parse_catalog(text: str) -> dict[tuple[int, int, int], CatalogEntry]:
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            t = NikulinTriple(int(fields[0]), int(fields[1]), int(fields[2]))
        except (IndexError, ValueError) as exc:
            raise ValueError(f"catalog line {lineno}: {line!r}") from exc
        out[t.as_tuple()] = CatalogEntry(t, frozenset(fields[3:]))
    return out


@lru_cache(maxsize=1)
def load_catalog() -> dict[tuple[int, int, int], CatalogEntry]:
    text = resources.files("bhcr").joinpath("data/nikulin_triples.txt").read_text()
    return parse_catalog(text)


def bhcr_model_available(t: NikulinTriple) -> Availability:
    lattice_mirror(t)
    if t.as_tuple() in BAD_TRIPLES:
        return Availability.NOT_AVAILABLE
    entry = load_catalog().get(t.as_tuple())
    if entry is None:
        return Availability.UNKNOWN
    if entry.theorem:
        return Availability.AVAILABLE
    return Availability.NO_DELSARTE_MODEL
