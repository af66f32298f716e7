"""JSON documents for groups, Γ-groups, crossed modules, modules and cochains.

The document kind is recognised from its exact key set:

* group: ``order``, ``table`` and optionally ``names``
* gamma-group: ``gamma``, ``group``, ``action`` (permutations keyed by γ-name)
* crossed module: ``A``, ``G``, ``rho``, ``theta`` and optionally ``braiding``
* module: ``generators``, ``relations``, ``gamma``, ``action`` (matrices)
* psi: ``psi``; cocycle: ``u`` and ``psi``

Sub-documents may be given inline or as a path string, resolved relative to
the file that refers to them.  Element entries may be indices or names.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .crossed import Braiding, CrossedModule
from .errors import CrossedCohError, SchemaError
from .groups import FiniteGroup, GammaGroup, make_gamma_group, make_group, make_hom
from .hyper import Cochain1
from .modules import GammaModule, fg_group, make_gamma_module

GROUP_KEYS = ({"order", "table"}, {"names"})
GAMMA_GROUP_KEYS = ({"gamma", "group", "action"}, set())
CROSSED_KEYS = ({"A", "G", "rho", "theta"}, {"braiding"})
MODULE_KEYS = ({"generators", "relations", "gamma", "action"}, set())
PSI_KEYS = ({"psi"}, set())
COCYCLE_KEYS = ({"u", "psi"}, set())

_KINDS = [
    ("group", GROUP_KEYS),
    ("crossed-module", CROSSED_KEYS),
    ("module", MODULE_KEYS),
    ("gamma-group", GAMMA_GROUP_KEYS),
    ("cocycle", COCYCLE_KEYS),
    ("psi", PSI_KEYS),
]


def _check_keys(doc: Any, keys: tuple[set, set], loc: str) -> None:
    if not isinstance(doc, dict):
        raise SchemaError(loc, "expected an object")
    required, optional = keys
    missing = required - doc.keys()
    if missing:
        raise SchemaError(loc, f"missing field(s) {sorted(missing)}")
    extra = doc.keys() - required - optional
    if extra:
        raise SchemaError(loc, f"unknown field(s) {sorted(extra)}")


def document_kind(doc: Any, loc: str = "$") -> str:
    if not isinstance(doc, dict):
        raise SchemaError(loc, "expected an object")
    keys = set(doc)
    for kind, (req, opt) in _KINDS:
        if req <= keys <= req | opt:
            return kind
    raise SchemaError(loc, f"unrecognised document with fields {sorted(keys)}")


class _Loader:
    def __init__(self, base: Path | None) -> None:
        self.base = base

    def ref(self, value: Any, loc: str) -> tuple[Any, "_Loader"]:
        if isinstance(value, str):
            if self.base is None:
                raise SchemaError(loc, "path reference without a base directory")
            path = (self.base / value).resolve()
            try:
                data = json.loads(path.read_text())
            except FileNotFoundError:
                raise SchemaError(loc, f"referenced file {value!r} not found") from None
            except json.JSONDecodeError as e:
                raise SchemaError(loc, f"{value}: invalid JSON ({e})") from None
            return data, _Loader(path.parent)
        return value, self

    # -- groups --------------------------------------------------------------

    def group(self, value: Any, loc: str) -> FiniteGroup:
        doc, ld = self.ref(value, loc)
        _check_keys(doc, GROUP_KEYS, loc)
        order, table = doc["order"], doc["table"]
        if not isinstance(order, int) or order < 1:
            raise SchemaError(f"{loc}.order", "must be a positive integer")
        if not _int_matrix(table) or len(table) != order:
            raise SchemaError(f"{loc}.table", f"must be an {order}×{order} integer array")
        names = doc.get("names")
        if names is not None and (
            not isinstance(names, list) or not all(isinstance(s, str) for s in names)
        ):
            raise SchemaError(f"{loc}.names", "must be a list of strings")
        try:
            return make_group(table, names)
        except CrossedCohError as e:
            raise SchemaError(loc, str(e)) from None

    def gamma_group(self, value: Any, loc: str, gamma: FiniteGroup | None = None) -> GammaGroup:
        doc, ld = self.ref(value, loc)
        _check_keys(doc, GAMMA_GROUP_KEYS, loc)
        gam = ld.group(doc["gamma"], f"{loc}.gamma")
        if gamma is not None and gam != gamma:
            raise SchemaError(f"{loc}.gamma", "Γ differs from the other component")
        grp = ld.group(doc["group"], f"{loc}.group")
        perms = _keyed(doc["action"], gam, f"{loc}.action")
        action = [[_elt(grp, x, f"{loc}.action[{gam.name(g)}]") for x in p] for g, p in enumerate(perms)]
        try:
            return make_gamma_group(gam, grp, action)
        except CrossedCohError as e:
            raise SchemaError(f"{loc}.action", str(e)) from None

    def crossed(self, value: Any, loc: str) -> CrossedModule | Braiding:
        doc, ld = self.ref(value, loc)
        _check_keys(doc, CROSSED_KEYS, loc)
        gA = ld.gamma_group(doc["A"], f"{loc}.A")
        gG = ld.gamma_group(doc["G"], f"{loc}.G", gA.gamma)
        A, G = gA.group, gG.group
        rho = doc["rho"]
        if not isinstance(rho, list) or len(rho) != A.order:
            raise SchemaError(f"{loc}.rho", f"must list {A.order} elements of G")
        rho = [_elt(G, x, f"{loc}.rho") for x in rho]
        try:
            make_hom(A, G, rho)
        except CrossedCohError as e:
            raise SchemaError(f"{loc}.rho", str(e)) from None
        perms = _keyed(doc["theta"], G, f"{loc}.theta")
        theta = []
        for g, p in enumerate(perms):
            where = f"{loc}.theta[{G.name(g)}]"
            if not isinstance(p, list) or len(p) != A.order:
                raise SchemaError(where, f"must be a permutation of {A.order} elements")
            theta.append(tuple(_elt(A, x, where) for x in p))
        cm = CrossedModule(gA, gG, tuple(rho), tuple(theta))
        if "braiding" not in doc:
            return cm
        br = doc["braiding"]
        where = f"{loc}.braiding"
        if not isinstance(br, list) or len(br) != G.order or any(
            not isinstance(r, list) or len(r) != G.order for r in br
        ):
            raise SchemaError(where, f"must be a {G.order}×{G.order} array of A elements")
        pairing = tuple(tuple(_elt(A, x, where) for x in row) for row in br)
        return Braiding(cm, pairing)

    def module(self, value: Any, loc: str) -> GammaModule:
        doc, ld = self.ref(value, loc)
        _check_keys(doc, MODULE_KEYS, loc)
        p = doc["generators"]
        if not isinstance(p, int) or p < 0:
            raise SchemaError(f"{loc}.generators", "must be a nonnegative integer")
        rels = doc["relations"]
        if not isinstance(rels, list) or not all(
            isinstance(r, list) and len(r) == p and all(isinstance(x, int) for x in r) for r in rels
        ):
            raise SchemaError(f"{loc}.relations", f"must be a list of length-{p} integer rows")
        gam = ld.group(doc["gamma"], f"{loc}.gamma")
        mats = _keyed(doc["action"], gam, f"{loc}.action")
        for g, M in enumerate(mats):
            if not _int_matrix(M) or len(M) != p or any(len(r) != p for r in M):
                raise SchemaError(f"{loc}.action[{gam.name(g)}]", f"must be a {p}×{p} integer matrix")
        try:
            return make_gamma_module(fg_group(p, rels), gam, mats)
        except CrossedCohError as e:
            raise SchemaError(f"{loc}.action", str(e)) from None


def _int_matrix(m: Any) -> bool:
    return isinstance(m, list) and all(
        isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r) for r in m
    )


def _elt(group: FiniteGroup, x: Any, loc: str) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise SchemaError(loc, f"element {x!r} must be an index or a name")
    try:
        return group.index_of(x)
    except KeyError:
        raise SchemaError(loc, f"unknown element {x!r}") from None


def _keyed(mapping: Any, group: FiniteGroup, loc: str) -> list[Any]:
    """Values of a {element-name: value} object, in element order."""
    if not isinstance(mapping, dict):
        raise SchemaError(loc, "expected an object keyed by element names")
    out: list[Any] = [None] * group.order
    for key, val in mapping.items():
        g = _elt(group, key, loc)
        if out[g] is not None:
            raise SchemaError(loc, f"element {key!r} given twice")
        out[g] = val
    missing = [group.name(g) for g in group.elements if out[g] is None]
    if missing:
        raise SchemaError(loc, f"missing entries for {missing}")
    return out


# ---------------------------------------------------------------------------


def load_json(path: str | Path) -> tuple[Any, Path]:
    path = Path(path)
    try:
        return json.loads(path.read_text()), path.resolve().parent
    except FileNotFoundError:
        raise SchemaError(str(path), "file not found") from None
    except json.JSONDecodeError as e:
        raise SchemaError(str(path), f"invalid JSON ({e})") from None


def parse_value(doc: Any, base: Path | None = None) -> Any:
    """Build the object a JSON value describes (see the module docstring)."""
    ld = _Loader(base)
    kind = document_kind(doc)
    if kind == "group":
        return ld.group(doc, "$")
    if kind == "gamma-group":
        return ld.gamma_group(doc, "$")
    if kind == "crossed-module":
        return ld.crossed(doc, "$")
    if kind == "module":
        return ld.module(doc, "$")
    raise SchemaError("$", f"a {kind} document needs a crossed module to be interpreted")


def parse_document(path: str | Path) -> Any:
    doc, base = load_json(path)
    return parse_value(doc, base)


def parse_psi(doc: Any, cm: CrossedModule, loc: str = "$") -> tuple[int, ...]:
    _check_keys(doc, PSI_KEYS, loc)
    psi = doc["psi"]
    N = cm.gamma.order
    if not isinstance(psi, list) or len(psi) != N:
        raise SchemaError(f"{loc}.psi", f"must list {N} elements of G")
    return tuple(_elt(cm.G, x, f"{loc}.psi") for x in psi)


def parse_cocycle(doc: Any, cm: CrossedModule, loc: str = "$") -> Cochain1:
    _check_keys(doc, COCYCLE_KEYS, loc)
    N = cm.gamma.order
    u = doc["u"]
    if not isinstance(u, list) or len(u) != N or any(not isinstance(r, list) or len(r) != N for r in u):
        raise SchemaError(f"{loc}.u", f"must be a {N}×{N} array of A elements")
    psi = doc["psi"]
    if not isinstance(psi, list) or len(psi) != N:
        raise SchemaError(f"{loc}.psi", f"must list {N} elements of G")
    flat = tuple(_elt(cm.A, x, f"{loc}.u") for row in u for x in row)
    return Cochain1(flat, tuple(_elt(cm.G, x, f"{loc}.psi") for x in psi))


# ---------------------------------------------------------------------------
# serialization: inline documents, elements by index


def serialize(obj: Any) -> dict:
    if isinstance(obj, FiniteGroup):
        d: dict[str, Any] = {"order": obj.order, "table": [list(r) for r in obj.table]}
        if obj.names is not None:
            d["names"] = list(obj.names)
        return d
    if isinstance(obj, GammaGroup):
        return {
            "gamma": serialize(obj.gamma),
            "group": serialize(obj.group),
            "action": {obj.gamma.name(g): list(p) for g, p in enumerate(obj.action)},
        }
    if isinstance(obj, Braiding):
        d = serialize(obj.base)
        d["braiding"] = [list(r) for r in obj.pairing]
        return d
    if isinstance(obj, CrossedModule):
        return {
            "A": serialize(obj.gammaA),
            "G": serialize(obj.gammaG),
            "rho": list(obj.rho),
            "theta": {obj.G.name(g): list(p) for g, p in enumerate(obj.theta)},
        }
    if isinstance(obj, GammaModule):
        return {
            "generators": obj.module.generators,
            "relations": [list(r) for r in obj.module.relations],
            "gamma": serialize(obj.gamma),
            "action": {obj.gamma.name(g): [list(r) for r in M] for g, M in enumerate(obj.action)},
        }
    if isinstance(obj, Cochain1):
        N = len(obj.psi)
        return {"u": [list(obj.u[s * N:(s + 1) * N]) for s in range(N)], "psi": list(obj.psi)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(serialize(obj), sort_keys=True)
