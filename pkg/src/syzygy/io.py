"""JSON formats for ideals, matroids and resolutions.

Ideal:      {"n": 4, "generators": ["x1*x2*x4", ...], "order": "given" | "declex"}
Matroid:    {"ground_size": 7, "bases": [[1, 2, 4], ...]}
Resolution: basis elements as {"I": [2], "j": 1}; differential entries as
            {"coeff": -1, "monomial": "x3", "target": {"I": [], "j": 0}}.
"""

from __future__ import annotations

import json
from pathlib import Path

from .chain import BasisElement, Chain
from .errors import SyzygyError
from .families import Matroid, matroidal_presentation, validate_matroid, validate_stable
from .monomial import format_monomial, parse_monomial
from .presentation import Presentation, presentation_from_generators, verify_linear_quotients
from .resolution import Resolution


class InputError(SyzygyError):
    pass


def load_json(source) -> dict:
    if isinstance(source, dict):
        return source
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data


def _generators(data: dict):
    try:
        n = int(data["n"])
        texts = data["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"ideal JSON needs integer 'n' and list 'generators' ({exc})") from exc
    if n < 1:
        raise InputError("n must be at least 1")
    if not isinstance(texts, list) or not texts:
        raise InputError("ideal JSON has an empty generator list")
    try:
        return n, [parse_monomial(str(t), n) for t in texts]
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_ideal(source, stable: bool = False) -> Presentation:
    data = load_json(source)
    n, gens = _generators(data)
    order = data.get("order", "given")
    tiebreak = data.get("tiebreak", "revlex")
    if order not in ("given", "declex"):
        raise InputError(f"unknown order {order!r}; expected 'given' or 'declex'")
    try:
        if stable:
            return validate_stable(n, gens, tiebreak=tiebreak)
        return presentation_from_generators(n, gens, order=order, tiebreak=tiebreak)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_matroid(source) -> Matroid:
    data = load_json(source)
    try:
        ground = int(data["ground_size"])
        bases = [[int(x) for x in b] for b in data["bases"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"matroid JSON needs 'ground_size' and 'bases' ({exc})") from exc
    try:
        return validate_matroid(ground, bases)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_any(source, stable: bool = False) -> Presentation:
    """Ideal or matroid JSON, told apart by the ``ground_size`` key."""
    data = load_json(source)
    if "ground_size" in data:
        return matroidal_presentation(parse_matroid(data))
    return parse_ideal(data, stable=stable)


def ideal_to_json(p: Presentation) -> dict:
    return {
        "n": p.n,
        "generators": [format_monomial(m) for m in p.generators],
        "order": "given",
        "tiebreak": p.order.monomial_tiebreak,
        "crit": [sorted(c) for c in p.crit],
    }


def matroid_to_json(m: Matroid) -> dict:
    return {"ground_size": m.ground_size, "bases": [list(b) for b in m.sorted_bases()]}


def basis_to_json(b: BasisElement) -> dict:
    return {"I": list(b.I), "j": b.j}


def basis_from_json(data: dict) -> BasisElement:
    return BasisElement(tuple(int(i) for i in data["I"]), int(data["j"]))


def chain_to_json(chain: Chain) -> list:
    rows = [
        {"coeff": c, "monomial": format_monomial(m), "target": basis_to_json(b)}
        for (m, b), c in chain.items()
    ]
    rows.sort(key=lambda r: (len(r["target"]["I"]), r["target"]["I"], r["target"]["j"], r["monomial"]))
    return rows


def chain_from_json(rows: list, n: int) -> Chain:
    out = Chain()
    for row in rows:
        out.add(parse_monomial(row["monomial"], n), basis_from_json(row["target"]), int(row["coeff"]))
    return out


def resolution_to_json(r: Resolution) -> dict:
    return {
        "ideal": ideal_to_json(r.presentation),
        "mode": r.mode,
        "betti": [len(level) for level in r.basis],
        "basis": [[basis_to_json(b) for b in level] for level in r.basis],
        "differential": [
            {"source": basis_to_json(b), "terms": chain_to_json(r.differential[b])}
            for b in r.elements()
        ],
    }


def resolution_from_json(data: dict) -> Resolution:
    ideal = data["ideal"]
    n = int(ideal["n"])
    gens = [parse_monomial(t, n) for t in ideal["generators"]]
    p = verify_linear_quotients(n, gens, tiebreak=ideal.get("tiebreak", "revlex"))
    if "crit" in ideal and [sorted(c) for c in p.crit] != ideal["crit"]:
        raise InputError("stored crit sets disagree with the generator order")
    basis = [[basis_from_json(b) for b in level] for level in data["basis"]]
    differential = {
        basis_from_json(entry["source"]): chain_from_json(entry["terms"], n)
        for entry in data["differential"]
    }
    return Resolution(p, basis, differential, data.get("mode", "ek"))


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False)
