"""Delsarte-type potentials: n monomials in n variables, stored as an exponent matrix.

A potential ``W = sum_i prod_j x_j^{a_ij}`` is determined by its square exponent
matrix ``A``.  Row ``i`` is monomial ``i`` and column ``j`` is variable ``j``;
the row order matters because transposition pairs monomial ``i`` with
variable ``i``.
"""

from __future__ import annotations

import itertools
import re
import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    DuplicateMonomial,
    NegativeOrMalformedExponent,
    NonSquare,
    ParseError,
    SingularMatrix,
    UnknownVariable,
)
from .linalg import Matrix


class CoefficientWarning(UserWarning):
    """A coefficient other than 1 was dropped while parsing."""


@dataclass(frozen=True)
class DelsartePolynomial:
    """An invertible Delsarte potential.

    ``coefficients`` is informational only (the sign in ``f - g`` for instance);
    it takes no part in equality or in any computation.
    """

    exponents: Matrix
    var_names: tuple[str, ...]
    coefficients: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        exps = linalg.as_matrix(self.exponents)
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "var_names", tuple(self.var_names))
        n = len(exps)
        if n == 0:
            raise NonSquare("a potential needs at least one monomial")
        if any(len(row) != n for row in exps):
            raise NonSquare(f"exponent matrix is not {n}x{n}")
        if len(self.var_names) != n:
            raise NonSquare(f"{n} monomials but {len(self.var_names)} variables")
        if len(set(self.var_names)) != n:
            raise ParseError(f"repeated variable name in {self.var_names}")
        if any(x < 0 for row in exps for x in row):
            raise NegativeOrMalformedExponent("exponents must be non-negative")
        if any(not any(row) for row in exps):
            raise ParseError("constant monomial")
        if len(set(exps)) != n:
            dup = [r for r, c in Counter(exps).items() if c > 1][0]
            raise DuplicateMonomial(f"monomial {_monomial_str(dup, self.var_names)} repeated")
        for j in range(n):
            if not any(row[j] for row in exps):
                raise UnknownVariable(f"variable {self.var_names[j]} does not appear")
        if linalg.det(exps) == 0:
            raise SingularMatrix("exponent matrix has zero determinant")
        if self.coefficients is None:
            object.__setattr__(self, "coefficients", (1,) * n)
        elif len(self.coefficients) != n:
            raise NonSquare("one coefficient per monomial expected")
        else:
            object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]], var_names: Iterable[str] | None = None,
                    prefix: str = "x", coefficients=None) -> "DelsartePolynomial":
        n = len(rows)
        names = tuple(var_names) if var_names is not None else tuple(f"{prefix}{i}" for i in range(n))
        return cls(linalg.as_matrix(rows), names, coefficients)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def determinant(self) -> int:
        return linalg.det(self.exponents)

    def transpose(self) -> "DelsartePolynomial":
        return DelsartePolynomial(linalg.transpose(self.exponents), self.var_names, self.coefficients)

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, signs: bool = True) -> str:
        out = []
        for k, row in enumerate(self.exponents):
            mono = _monomial_str(row, self.var_names)
            neg = signs and self.coefficients[k] < 0
            if not out:
                out.append(("-" if neg else "") + mono)
            else:
                out.append(("-" if neg else "+") + mono)
        return "".join(out)

    def canonical_string(self) -> str:
        """Monomials sorted by exponent row (descending), coefficients dropped."""
        rows = sorted(self.exponents, reverse=True)
        return "+".join(_monomial_str(r, self.var_names) for r in rows)


def _monomial_str(row, names) -> str:
    parts = []
    for e, name in zip(row, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[+\-*^])|(?P<bad>\S))")


def _tokenize(text: str):
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        kind = m.lastgroup
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group('bad')!r} at offset {m.start('bad')}")
        yield kind, m.group(kind)


def _split_ident(ident: str, declared: Sequence[str]) -> list[str]:
    if ident in declared:
        return [ident]
    # juxtaposed declared names, e.g. "y1y2" with y1, y2 declared
    out = []
    rest = ident
    names = sorted(declared, key=len, reverse=True)
    while rest:
        for name in names:
            if rest.startswith(name):
                out.append(name)
                rest = rest[len(name):]
                break
        else:
            raise UnknownVariable(f"unknown variable {ident!r}")
    return out


def parse_delsarte(text: str, variables: Sequence[str] | None = None) -> DelsartePolynomial:
    """Parse ``x0^3+x1^3+x2^3``-style input.

    Variables are ordered by ``variables`` when given, otherwise by first
    appearance.  With declared variables, juxtaposed names such as ``y1y2^5``
    are split against the declaration.  Coefficients (including the implicit
    -1 of a minus sign) are recorded, warned about, and otherwise ignored.
    """
    declared = list(variables) if variables is not None else None
    tokens = list(_tokenize(text))
    if not tokens:
        raise ParseError("empty polynomial")

    terms: list[tuple[int, dict[str, int]]] = []
    order: list[str] = list(declared) if declared is not None else []
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    while i < len(tokens):
        sign = 1
        while peek() in (("op", "+"), ("op", "-")):
            if peek()[1] == "-":
                sign = -sign
            i += 1
        coeff = 1
        if peek()[0] == "int":
            coeff = int(tokens[i][1])
            i += 1
            if peek() == ("op", "*"):
                i += 1
        powers: dict[str, int] = {}
        while True:
            kind, val = peek()
            if kind != "ident":
                break
            i += 1
            names = _split_ident(val, declared) if declared is not None else [val]
            exp = 1
            if peek() == ("op", "^"):
                i += 1
                if peek()[0] != "int":
                    raise NegativeOrMalformedExponent(f"bad exponent after {val!r}")
                exp = int(tokens[i][1])
                i += 1
            for k, name in enumerate(names):
                if declared is None and name not in order:
                    order.append(name)
                # the exponent binds to the last juxtaposed name only
                e = exp if k == len(names) - 1 else 1
                powers[name] = powers.get(name, 0) + e
            if peek() == ("op", "*"):
                i += 1
                if peek()[0] != "ident":
                    raise ParseError("dangling '*'")
        if not powers:
            raise ParseError(f"malformed monomial near token {i}")
        if coeff == 0:
            raise ParseError("zero coefficient")
        terms.append((sign * coeff, powers))
        kind, val = peek()
        if kind is None:
            break
        if kind != "op" or val not in "+-":
            raise ParseError(f"unexpected token {val!r}")

    if any(e == 0 for _, p in terms for e in p.values()):
        raise NegativeOrMalformedExponent("zero exponent")
    rows = [tuple(p.get(name, 0) for name in order) for _, p in terms]
    coeffs = tuple(c for c, _ in terms)
    if len(set(rows)) != len(rows):
        raise DuplicateMonomial("repeated monomial")
    if len(rows) != len(order):
        raise NonSquare(f"{len(rows)} monomials in {len(order)} variables")
    if any(c != 1 for c in coeffs):
        warnings.warn(f"coefficients {coeffs} rescaled to 1", CoefficientWarning, stacklevel=2)
    return DelsartePolynomial(tuple(rows), tuple(order), coeffs)


# ------------------------------------------------------- permutation search

def equivalent_up_to_permutation(p: DelsartePolynomial, q: DelsartePolynomial):
    """Search for ``(rows, cols)`` with ``q.exponents[i][j] == p.exponents[rows[i]][cols[j]]``.

    Returns None when no such pair of permutations exists.
    """
    n = p.n
    if q.n != n:
        return None
    pa, qa = p.exponents, q.exponents
    # cheap invariants first
    if sorted(map(sorted, pa)) != sorted(map(sorted, qa)):
        return None
    if sorted(map(sorted, zip(*pa))) != sorted(map(sorted, zip(*qa))):
        return None
    target = Counter(qa)
    q_index = {row: i for i, row in enumerate(qa)}
    for cols in itertools.permutations(range(n)):
        permuted = [tuple(row[c] for c in cols) for row in pa]
        if Counter(permuted) != target:
            continue
        rows = [0] * n
        for k, row in enumerate(permuted):
            rows[q_index[row]] = k
        return tuple(rows), tuple(cols)
    return None


# ---------------------------------------------------- atomic decomposition

@dataclass(frozen=True)
class AtomicBlock:
    """One Fermat, chain or loop atom.

    ``variables`` lists variable indices in atom order (chain head first);
    ``exponents`` the matching diagonal exponents.
    """

    kind: str
    variables: tuple[int, ...]
    exponents: tuple[int, ...]

    def describe(self) -> str:
        return f"{self.kind}({','.join(map(str, self.exponents))})"


@dataclass(frozen=True)
class AtomicDecomposition:
    blocks: tuple[AtomicBlock, ...] | None

    @property
    def determined(self) -> bool:
        return self.blocks is not None

    def describe(self) -> str:
        if self.blocks is None:
            return "undetermined"
        return " + ".join(b.describe() for b in self.blocks)


UNDETERMINED = AtomicDecomposition(None)


def _main_candidates(row) -> list[int]:
    support = [j for j, e in enumerate(row) if e]
    if len(support) == 1:
        return support
    if len(support) != 2:
        return []
    return [j for j in support if all(row[k] == 1 for k in support if k != j)]


def atomic_decomposition(p: DelsartePolynomial) -> AtomicDecomposition:
    """Split ``p`` into Fermat/chain/loop atoms, or report it undetermined.

    Each monomial gets a main variable (bijectively); the remaining variable of
    a two-term monomial, with exponent exactly 1, is its pointer.  Following
    pointers gives isolated nodes (Fermat), paths (chains) and cycles (loops).
    """
    n = p.n
    A = p.exponents
    cands = [_main_candidates(row) for row in A]
    if any(not c for c in cands):
        return UNDETERMINED

    def search(i, used, assign):
        if i == n:
            yield tuple(assign)
            return
        for j in cands[i]:
            if j not in used:
                assign.append(j)
                used.add(j)
                yield from search(i + 1, used, assign)
                used.discard(j)
                assign.pop()

    for main in search(0, set(), []):
        blocks = _blocks_from_assignment(A, main)
        if blocks is not None:
            return AtomicDecomposition(blocks)
    return UNDETERMINED


def _blocks_from_assignment(A, main):
    n = len(A)
    mono_of_var = {v: i for i, v in enumerate(main)}
    nxt: dict[int, int] = {}
    for i, row in enumerate(A):
        others = [j for j, e in enumerate(row) if e and j != main[i]]
        if others:
            nxt[i] = mono_of_var[others[0]]
    indeg = Counter(nxt.values())
    if any(c > 1 for c in indeg.values()):
        return None

    seen: set[int] = set()
    blocks = []
    # paths start at monomials nobody points to
    for start in range(n):
        if start in seen or indeg.get(start):
            continue
        path = [start]
        while path[-1] in nxt:
            path.append(nxt[path[-1]])
        seen.update(path)
        exps = tuple(A[i][main[i]] for i in path)
        variables = tuple(main[i] for i in path)
        if len(path) == 1:
            if exps[0] < 2:
                return None
            blocks.append(AtomicBlock("fermat", variables, exps))
        else:
            if exps[-1] < 2:
                return None
            blocks.append(AtomicBlock("chain", variables, exps))
    # whatever is left lies on cycles
    for start in range(n):
        if start in seen:
            continue
        cycle = [start]
        while nxt[cycle[-1]] != start:
            cycle.append(nxt[cycle[-1]])
        seen.update(cycle)
        exps = tuple(A[i][main[i]] for i in cycle)
        if len(cycle) == 2 and exps == (1, 1):
            return None
        blocks.append(AtomicBlock("loop", tuple(main[i] for i in cycle), exps))
    blocks.sort(key=lambda b: min(b.variables))
    return tuple(blocks)
