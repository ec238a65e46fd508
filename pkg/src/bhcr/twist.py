"""Twist-map models ``f - g`` for products of a curve ``x0^2 + f`` and a K3 ``y0^2 + g``."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .delsarte import DelsartePolynomial
from .errors import (
    FirstMonomialNotPureSquare,
    InputError,
    InternalError,
    NotCalabiYauFactor,
    NotCoprime,
    TransposedGcdObstruction,
    WeightObstruction,
)
from .weights import WeightSystem, is_calabi_yau, weight_system


@dataclass(frozen=True)
class TwistParameters:
    ell: int
    u0: int
    v0: int
    s0: int
    t0: int
    s: int
    t: int


def twist_parameters(ell: int, u0: int, v0: int) -> TwistParameters:
    """Solve ``s0*u0 + 1 = 0 mod v0`` and ``t0*v0 + 1 = 0 mod u0`` in range."""
    if ell < 2:
        raise InputError(f"ell must be >= 2, got {ell}")
    if u0 < 1 or v0 < 1:
        raise InputError("u0 and v0 must be positive")
    if gcd(u0, v0) != 1:
        raise NotCoprime(f"gcd({u0}, {v0}) = {gcd(u0, v0)}")
    s0 = (-pow(u0, -1, v0)) % v0 if v0 > 1 else 0
    t0 = (-pow(v0, -1, u0)) % u0 if u0 > 1 else 0
    return TwistParameters(ell, u0, v0, s0, t0, (s0 * u0 + 1) // v0, (t0 * v0 + 1) // u0)


@dataclass(frozen=True)
class TwistModel:
    curve_potential: DelsartePolynomial
    surface_potential: DelsartePolynomial
    product_potential: DelsartePolynomial
    weights: WeightSystem
    curve_weights: WeightSystem
    surface_weights: WeightSystem
    parameters: TwistParameters

    @property
    def m(self) -> int:
        """Number of curve variables kept in the product."""
        return self.curve_potential.n - 1

    @property
    def case(self) -> int:
        """1 for curves in P(2,1,1), 2 for P(3,2,1), 0 otherwise."""
        return {(2, 1, 1): 1, (3, 2, 1): 2}.get(self.curve_weights.weights, 0)


def _check_square_head(p: DelsartePolynomial, role: str):
    A = p.exponents
    if A[0] != (2,) + (0,) * (p.n - 1):
        raise FirstMonomialNotPureSquare(
            f"{role} {p}: first monomial must be {p.var_names[0]}^2 alone"
        )
    if any(row[0] for row in A[1:]):
        raise FirstMonomialNotPureSquare(
            f"{role} {p}: {p.var_names[0]} must not appear outside the first monomial"
        )


def hat(p: DelsartePolynomial) -> DelsartePolynomial:
    """Delete the first monomial and the first variable."""
    rows = [row[1:] for row in p.exponents[1:]]
    return DelsartePolynomial.from_matrix(rows, p.var_names[1:], coefficients=p.coefficients[1:])


def _join(f: DelsartePolynomial, g: DelsartePolynomial, sign_g: int = -1) -> DelsartePolynomial:
    m, k = f.n, g.n
    rows = [row + (0,) * k for row in f.exponents] + [(0,) * m + row for row in g.exponents]
    names = f.var_names + g.var_names
    if len(set(names)) != len(names):
        raise InputError(f"curve and surface share variable names: {names}")
    coeffs = (1,) * m + (sign_g,) * k
    return DelsartePolynomial.from_matrix(rows, names, coefficients=coeffs)


def build_twist_model(curve: DelsartePolynomial, surface: DelsartePolynomial) -> TwistModel:
    """Glue ``x0^2 + f`` and ``y0^2 + g`` into ``f - g`` in ``P(v0*u, u0*v)``.

    Accepts curves with weights (2,1,1) (``v0`` odd) or (3,2,1) (``3 !| v0``).
    """
    if curve.n != 3:
        raise InputError(f"curve potential needs 3 variables, got {curve.n}")
    if surface.n != 4:
        raise InputError(f"surface potential needs 4 variables, got {surface.n}")
    _check_square_head(curve, "curve")
    _check_square_head(surface, "surface")
    cw = weight_system(curve)
    sw = weight_system(surface)
    for ws, role, p in ((cw, "curve", curve), (sw, "surface", surface)):
        if not is_calabi_yau(ws):
            raise NotCalabiYauFactor(f"{role} {p} in {ws} is not Calabi-Yau")
    u0, v0 = cw.weights[0], sw.weights[0]
    if cw.weights not in ((2, 1, 1), (3, 2, 1)):
        raise WeightObstruction(f"curve weights {cw.weights} are neither (2,1,1) nor (3,2,1)")
    if gcd(u0, v0) != 1:
        reason = "v0 is divisible by 6, the twist map is not defined" if v0 % 6 == 0 else \
            f"gcd(u0, v0) = gcd({u0}, {v0}) != 1"
        raise WeightObstruction(reason)
    params = twist_parameters(2, u0, v0)

    product = _join(hat(curve), hat(surface))
    ws = weight_system(product)
    expected = tuple(v0 * x for x in cw.weights[1:]) + tuple(u0 * x for x in sw.weights[1:])
    if ws.weights != expected or ws.degree != 2 * u0 * v0 or not is_calabi_yau(ws):
        raise InternalError(f"product weights {ws} differ from {expected}, degree {2 * u0 * v0}")
    return TwistModel(curve, surface, product, ws, cw, sw, params)


def transposed_model(model: TwistModel) -> TwistModel:
    """The model built from the transposed factors.

    Its product potential is the transpose of ``model.product_potential``.
    """
    cwt = weight_system(model.curve_potential.transpose())
    swt = weight_system(model.surface_potential.transpose())
    if gcd(cwt.weights[0], swt.weights[0]) != 1:
        raise TransposedGcdObstruction(
            f"gcd(u0^T, v0^T) = gcd({cwt.weights[0]}, {swt.weights[0]}) != 1"
        )
    return build_twist_model(model.curve_potential.transpose(), model.surface_potential.transpose())


def transposed_twist_weights(model: TwistModel) -> WeightSystem:
    """Weights of the transposed product, ``(v0^T u^T, u0^T v^T)`` in degree ``2 u0^T v0^T``."""
    cwt = weight_system(model.curve_potential.transpose())
    swt = weight_system(model.surface_potential.transpose())
    u0t, v0t = cwt.weights[0], swt.weights[0]
    if gcd(u0t, v0t) != 1:
        raise TransposedGcdObstruction(f"gcd(u0^T, v0^T) = gcd({u0t}, {v0t}) != 1")
    predicted = tuple(v0t * x for x in cwt.weights[1:]) + tuple(u0t * x for x in swt.weights[1:])
    degree = 2 * u0t * v0t
    direct = weight_system(model.product_potential.transpose())
    if direct.weights != predicted or direct.degree != degree:
        raise InternalError(f"transposed product has {direct}, expected {predicted} degree {degree}")
    return direct
