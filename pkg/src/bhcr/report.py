"""Structured, JSON-serialisable reports behind the CLI commands.

Every report has the same six top-level keys; commands leave the ones they
do not use as ``None``.  Rationals are written as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from typing import Any, Sequence

from .delsarte import DelsartePolynomial, atomic_decomposition
from .duality import transposed_group
from .errors import BHCRError, NonCalabiYau
from .invariants import (
    NikulinTriple,
    bhcr_model_available,
    fixed_locus,
    hodge_numbers,
    hodge_swap_check,
    lattice_mirror,
)
from .splitting import (
    product_group,
    split_representative,
    theta,
    verify_transposed_splitting,
)
from .symmetries import (
    AUT,
    SL,
    SLTILDE,
    DiagonalSymmetry,
    SymmetryGroup,
    aut_group,
    j_element,
    sl_group,
    sl_tilde,
    subgroup_generated,
)
from .twist import TwistModel, build_twist_model, transposed_model, transposed_twist_weights
from .weights import WeightSystem, degrees_of_monomials, is_calabi_yau, is_normalized, weight_system


@dataclass
class AnalysisReport:
    input: Any = None
    weights: Any = None
    groups: Any = None
    transpose: Any = None
    borcea_voisin: Any = None
    verdicts: Any = None

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kw) -> str:
        kw.setdefault("indent", 2)
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        names = {f.name for f in fields(cls)}
        if set(data) != names:
            raise ValueError(f"report keys {sorted(data)} != {sorted(names)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    def all_verdicts_pass(self) -> bool:
        if not self.verdicts:
            return True
        return all(v is not False for v in _flatten_bools(self.verdicts))


def _flatten_bools(obj):
    if isinstance(obj, bool):
        yield obj
    elif isinstance(obj, dict):
        for v in obj.values():
            yield from _flatten_bools(v)


def phases(g: DiagonalSymmetry) -> list[str]:
    return g.to_strings()


def _weights_block(p: DelsartePolynomial, ws: WeightSystem) -> dict:
    return {
        "potential": str(p),
        "charges": [str(c) for c in ws.charges],
        "weights": list(ws.weights),
        "degree": ws.degree,
    }


def _group_block(G: SymmetryGroup) -> dict:
    return {
        "kind": G.kind,
        "order": G.order,
        "generators": [phases(g) for g in G.generators],
        "elements": [phases(g) for g in G],
    }


# ----------------------------------------------------------------- analyze

def _group_orders(p: DelsartePolynomial, ws: WeightSystem) -> dict:
    j = j_element(p)
    out = {
        "determinant": p.determinant,
        "aut_order": aut_group(p).order,
        "sl_order": sl_group(p).order,
        "j": phases(j),
        "j_order": j.order(),
        "sl_tilde_order": None,
        "sl_tilde_elements": None,
    }
    if is_calabi_yau(ws):
        G = sl_tilde(p)
        out["sl_tilde_order"] = G.order
        out["sl_tilde_elements"] = [phases(g) for g in G]
    return out


def analyze(p: DelsartePolynomial, *, with_transpose: bool = False, require_cy: bool = False) -> AnalysisReport:
    ws = weight_system(p)
    cy = is_calabi_yau(ws)
    if require_cy and not cy:
        raise NonCalabiYau(f"{p} in {ws}: sum of weights {sum(ws.weights)} != degree {ws.degree}")
    dec = atomic_decomposition(p)
    weights = _weights_block(p, ws)
    weights["monomial_degrees"] = list(degrees_of_monomials(p, ws))
    report = AnalysisReport(
        input={
            "command": "analyze",
            "potential": str(p),
            "canonical": p.canonical_string(),
            "variables": list(p.var_names),
            "coefficients": list(p.coefficients),
            "exponents": [list(r) for r in p.exponents],
        },
        weights=weights,
        groups=_group_orders(p, ws),
        verdicts={
            "normalized": is_normalized(ws),
            "calabi_yau": cy,
            "atomic_decomposition": dec.describe(),
            "non_degenerate_certificate": dec.determined,
        },
    )
    if with_transpose:
        pt = p.transpose()
        wst = weight_system(pt)
        block = _weights_block(pt, wst)
        block["normalized"] = is_normalized(wst)
        block["calabi_yau"] = is_calabi_yau(wst)
        block["groups"] = _group_orders(pt, wst)
        report.transpose = block
    return report


def transpose_report(p: DelsartePolynomial) -> AnalysisReport:
    pt = p.transpose()
    return AnalysisReport(
        input={"command": "transpose", "potential": str(p), "variables": list(p.var_names)},
        transpose={
            "potential": str(pt),
            "exponents": [list(r) for r in pt.exponents],
            **{k: v for k, v in _weights_block(pt, weight_system(pt)).items() if k != "potential"},
        },
    )


# ------------------------------------------------------------------- group

_KINDS = {"aut": (AUT, aut_group), "sl": (SL, sl_group), "sltilde": (SLTILDE, sl_tilde)}


def group_report(p: DelsartePolynomial, kind: str = "sltilde",
                 generators: Sequence[DiagonalSymmetry] | None = None,
                 with_transposed: bool = False) -> AnalysisReport:
    _, build = _KINDS[kind]
    ambient = build(p)
    G = subgroup_generated(ambient, generators) if generators is not None else ambient
    report = AnalysisReport(
        input={
            "command": "group",
            "potential": str(p),
            "kind": ambient.kind,
            "generators": [phases(g) for g in generators] if generators is not None else None,
        },
        groups={"ambient_order": ambient.order, "group": _group_block(G)},
    )
    if with_transposed:
        GT = transposed_group(G)
        report.transpose = {"potential": str(GT.potential), "group": _group_block(GT)}
        report.verdicts = {"double_transpose": transposed_group(GT).element_set() == G.element_set()}
    return report


# --------------------------------------------------------------- mirror-bv

def _split_block(model: TwistModel, g: DiagonalSymmetry) -> dict:
    se = theta(model, g)
    return {
        "canonical": phases(g),
        "split_representative": phases(split_representative(model, g)),
        "curve": phases(se.curve_part),
        "surface": phases(se.surface_part),
    }


def triple_block(t: NikulinTriple) -> tuple[dict, list[str]]:
    """Fixed locus, Hodge numbers and mirror data; obstructions are collected, not raised."""
    errors = []
    block: dict[str, Any] = {"triple": list(t.as_tuple())}
    try:
        g, k = fixed_locus(t)
        block["fixed_locus"] = {"genus": g, "rational_curves": k}
    except BHCRError as exc:
        block["fixed_locus"] = None
        errors.append(f"{type(exc).__name__}: {exc}")
    block["hodge"] = list(hodge_numbers(t))
    try:
        m = lattice_mirror(t)
        block["mirror_triple"] = list(m.as_tuple())
        block["mirror_hodge"] = list(hodge_numbers(m))
        block["hodge_swap"] = hodge_swap_check(t)
        block["bhcr_model"] = bhcr_model_available(t).value
    except BHCRError as exc:
        block.update(mirror_triple=None, mirror_hodge=None, hodge_swap=None, bhcr_model=None)
        errors.append(f"{type(exc).__name__}: {exc}")
    return block, errors


def triple_report(t: NikulinTriple) -> tuple[AnalysisReport, list[str]]:
    block, errors = triple_block(t)
    report = AnalysisReport(
        input={"command": "triple", "triple": list(t.as_tuple())},
        borcea_voisin=block,
        verdicts={"errors": errors, "hodge_swap": block["hodge_swap"]},
    )
    return report, errors


def mirror_bv(curve: DelsartePolynomial, surface: DelsartePolynomial,
              curve_generators: Sequence[DiagonalSymmetry] = (),
              surface_generators: Sequence[DiagonalSymmetry] = (),
              triple: NikulinTriple | None = None) -> AnalysisReport:
    model = build_twist_model(curve, surface)
    tmodel = transposed_model(model)
    tw = transposed_twist_weights(model)

    G_E = subgroup_generated(sl_tilde(curve), curve_generators)
    G_S = subgroup_generated(sl_tilde(surface), surface_generators)
    G_ES = product_group(model, G_E, G_S)
    cert = verify_transposed_splitting(model, G_E, G_S)
    G_ES_T = cert.transposed_product_group
    G_E_T = transposed_group(G_E)
    G_S_T = transposed_group(G_S)

    p = model.parameters
    report = AnalysisReport(
        input={
            "command": "mirror-bv",
            "curve": str(curve),
            "surface": str(surface),
            "curve_generators": [phases(g) for g in curve_generators],
            "surface_generators": [phases(g) for g in surface_generators],
        },
        weights={
            "curve": _weights_block(curve, model.curve_weights),
            "surface": _weights_block(surface, model.surface_weights),
            "product": _weights_block(model.product_potential, model.weights),
            "twist": {"ell": p.ell, "u0": p.u0, "v0": p.v0, "s0": p.s0, "t0": p.t0, "s": p.s, "t": p.t},
            "model_case": model.case,
        },
        groups={
            "sl_tilde_orders": {
                "curve": sl_tilde(curve).order,
                "surface": sl_tilde(surface).order,
                "product": sl_tilde(model.product_potential).order,
            },
            "G_E": _group_block(G_E),
            "G_S": _group_block(G_S),
            "G_ES": [_split_block(model, g) for g in G_ES],
        },
        transpose={
            "curve": _weights_block(tmodel.curve_potential, tmodel.curve_weights),
            "surface": _weights_block(tmodel.surface_potential, tmodel.surface_weights),
            "product": _weights_block(model.product_potential.transpose(), tw),
            "sl_tilde_orders": {
                "curve": sl_tilde(tmodel.curve_potential).order,
                "surface": sl_tilde(tmodel.surface_potential).order,
                "product": sl_tilde(tmodel.product_potential).order,
            },
            "G_E^T": _group_block(G_E_T),
            "G_S^T": _group_block(G_S_T),
            "G_ES^T": [_split_block(tmodel, g) for g in G_ES_T],
        },
        verdicts={
            "product_calabi_yau": is_calabi_yau(model.weights),
            "transposed_product_calabi_yau": is_calabi_yau(tw),
            "transposed_weights": tmodel.weights == tw,
            "splitting": cert.holds,
        },
    )
    if triple is not None:
        block, errors = triple_block(triple)
        report.borcea_voisin = block
        report.verdicts["triple_errors"] = errors
    return report


# ------------------------------------------------------------------- table

def table_report(mode: str = "verify") -> AnalysisReport:
    from .fixtures import verify_table

    rows = verify_table()
    report = AnalysisReport(input={"command": "table", "mode": mode}, groups={"rows": rows})
    if mode == "verify":
        report.verdicts = {f"row{r['index']}": not r["failures"] for r in rows}
    return report
