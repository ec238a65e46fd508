"""Built-in fixtures: the elliptic-curve mirror table and the worked K3 example.

The data lives in ``data/fixtures.json`` so the CLI and the tests read the
same numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .delsarte import DelsartePolynomial, equivalent_up_to_permutation, parse_delsarte
from .errors import RowMismatch
from .symmetries import sl_group, sl_tilde
from .twist import TwistModel, build_twist_model
from .weights import weight_system


@lru_cache(maxsize=1)
def raw() -> dict:
    return json.loads(resources.files("bhcr").joinpath("data/fixtures.json").read_text())


@dataclass(frozen=True)
class EllipticTableRow:
    index: int
    weights: tuple[int, int, int]
    potential: DelsartePolynomial
    sl_order: int
    sl_tilde_order: int
    mirror_index: int
    used: bool


@lru_cache(maxsize=1)
def elliptic_table() -> tuple[EllipticTableRow, ...]:
    data = raw()
    names = data["elliptic_variables"]
    rows = []
    for r in data["elliptic_table"]:
        rows.append(EllipticTableRow(
            r["index"], tuple(r["weights"]), parse_delsarte(r["potential"], names),
            r["sl_order"], r["sl_tilde_order"], r["mirror"], r["used"],
        ))
    return tuple(rows)


def table_row(index: int) -> EllipticTableRow:
    return elliptic_table()[index - 1]


def worked_example() -> dict:
    return raw()["worked_example"]


def worked_example_model() -> TwistModel:
    ex = worked_example()
    curve = parse_delsarte(ex["curve"])
    surface = parse_delsarte(ex["surface"], ex["surface_variables"])
    return build_twist_model(curve, surface)


SURFACE_VARIABLES = ("y0", "y1", "y2", "y3")


def twist_fixture_models() -> dict[str, TwistModel]:
    out = {}
    for fx in raw()["twist_fixtures"]:
        curve = table_row(fx["curve_row"]).potential
        surface = parse_delsarte(fx["surface"], SURFACE_VARIABLES)
        out[fx["name"]] = build_twist_model(curve, surface)
    return out


def obstruction_inputs(name: str) -> tuple[DelsartePolynomial, DelsartePolynomial]:
    fx = raw()["obstructions"][name]
    return table_row(fx["curve_row"]).potential, parse_delsarte(fx["surface"], SURFACE_VARIABLES)


def fixture_potentials() -> dict[str, DelsartePolynomial]:
    """Every potential used as a fixture, keyed by a short label."""
    out = {f"row{r.index}": r.potential for r in elliptic_table()}
    for name, model in twist_fixture_models().items():
        out[f"{name}:surface"] = model.surface_potential
        out[f"{name}:surface^T"] = model.surface_potential.transpose()
        out[f"{name}:product"] = model.product_potential
        out[f"{name}:product^T"] = model.product_potential.transpose()
    return out


def check_row(row: EllipticTableRow) -> dict:
    """Recompute one table row; returns field -> (expected, computed)."""
    p = row.potential
    ws = weight_system(p)
    mirror = table_row(row.mirror_index).potential
    perm = equivalent_up_to_permutation(p.transpose(), mirror)
    return {
        "weights": (list(row.weights), list(ws.weights)),
        "degree": (sum(row.weights), ws.degree),
        "sl_order": (row.sl_order, sl_group(p).order),
        "sl_tilde_order": (row.sl_tilde_order, sl_tilde(p).order),
        "mirror": (row.mirror_index, row.mirror_index if perm is not None else None),
        "mirror_involution": (row.index, table_row(row.mirror_index).mirror_index),
    }


def verify_table(strict: bool = False) -> list[dict]:
    results = []
    for row in elliptic_table():
        fields = check_row(row)
        failures = [k for k, (exp, got) in fields.items() if exp != got]
        if strict and failures:
            k = failures[0]
            raise RowMismatch(f"row {row.index}: {k} expected {fields[k][0]}, got {fields[k][1]}")
        results.append({
            "index": row.index,
            "potential": str(row.potential),
            "weights": fields["weights"][1],
            "degree": fields["degree"][1],
            "sl_order": fields["sl_order"][1],
            "sl_tilde_order": fields["sl_tilde_order"][1],
            "mirror": row.mirror_index,
            "transpose": str(row.potential.transpose()),
            "failures": failures,
        })
    return results
