"""``crossedcoh`` command line interface.

Exit status: 0 when every expectation or validation passes, 1 when a check
fails, 2 for unusable input (schema errors, invalid data, budget exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .braided import h1_abelian, is_symmetric_braiding
from .config import resolve_budget
from .crossed import (
    Braiding,
    CrossedModule,
    derived_identities,
    validate_braiding,
    validate_crossed_module,
)
from .errors import CrossedCohError, SchemaError
from .groups import FiniteGroup, GammaGroup
from .hyper import Cochain1, cr1, h1_pointed, is_cocycle1
from .io import load_json, parse_cocycle, parse_document, parse_psi
from .modules import GammaModule, mod_h0, mod_h1
from .obstruction import delta_coboundary, is_cocycle2, is_neutral_class
from .scenarios import SCENARIOS, run_scenario


class _Failure(Exception):
    """Input that parsed but cannot be used (for example an invalid crossed module)."""


def _cochain_doc(cm: CrossedModule, z: Cochain1) -> dict:
    N = cm.gamma.order
    return {
        "u": [[cm.A.name(z.u[s * N + t]) for t in range(N)] for s in range(N)],
        "psi": [cm.G.name(g) for g in z.psi],
    }


def _load_crossed(path: str) -> tuple[CrossedModule, Braiding | None]:
    obj = parse_document(path)
    if isinstance(obj, Braiding):
        cm, br = obj.base, obj
    elif isinstance(obj, CrossedModule):
        cm, br = obj, None
    else:
        raise SchemaError(path, "expected a crossed-module document")
    rep = validate_crossed_module(cm)
    if not rep.ok:
        raise _Failure(f"not a crossed module: {', '.join(rep.failed())}")
    return cm, br


# ---------------------------------------------------------------------------
# commands; each returns (payload, passed)


def cmd_validate(args: argparse.Namespace) -> tuple[dict, bool]:
    obj = parse_document(args.input)
    if isinstance(obj, FiniteGroup):
        return {"kind": "group", "order": obj.order, "valid": True}, True
    if isinstance(obj, GammaGroup):
        return {"kind": "gamma-group", "gamma_order": obj.gamma.order, "order": obj.group.order, "valid": True}, True
    if isinstance(obj, GammaModule):
        M = obj.module
        return {
            "kind": "module",
            "valid": True,
            "invariant_factors": list(M.invariant_factors),
            "rank": M.rank,
        }, True
    br = obj if isinstance(obj, Braiding) else None
    cm = br.base if br else obj
    rep = validate_crossed_module(cm)
    out: dict[str, Any] = {"kind": "crossed-module", "crossed_module": rep.to_dict()}
    ok = rep.ok
    if br is not None:
        brep = validate_braiding(br, "braided")
        out["braiding"] = brep.to_dict()
        ok = ok and brep.ok
        if brep.ok:
            out["derived_identities"] = derived_identities(br).to_dict()
            out["symmetric"] = validate_braiding(br, "symmetric").ok
            out["picard"] = validate_braiding(br, "picard").ok
            ok = ok and out["derived_identities"]["ok"]
    out["valid"] = ok
    return out, ok


def cmd_h1(args: argparse.Namespace) -> tuple[dict, bool]:
    cm, _ = _load_crossed(args.input)
    h1 = h1_pointed(cm, args.budget)
    return {
        "classes": [
            {"index": k, "orbit_size": c.orbit_size, "representative": _cochain_doc(cm, c.representative)}
            for k, c in enumerate(h1.classes)
        ],
        "count": len(h1),
        "distinguished": h1.distinguished,
        "z1_size": len(h1.z1),
    }, True


def cmd_h1_abelian(args: argparse.Namespace) -> tuple[dict, bool]:
    cm, br = _load_crossed(args.input)
    if br is None:
        raise _Failure("the document has no braiding")
    rep = validate_braiding(br, "braided")
    if not rep.ok:
        raise _Failure(f"invalid braiding: {', '.join(rep.failed())}")
    ab = h1_abelian(br, args.budget)
    out = {
        "order": ab.order,
        "abelian": ab.is_abelian,
        "symmetric_braiding": is_symmetric_braiding(br),
        "identity": ab.identity,
        "inverse": list(ab.inverse),
        "mul_table": [list(r) for r in ab.mul_table],
        "classes": [_cochain_doc(cm, c.representative) for c in ab.classes],
    }
    if ab.is_abelian:
        out["invariant_factors"] = list(ab.invariant_factors)
    return out, ab.is_abelian or not is_symmetric_braiding(br)


def cmd_cr1(args: argparse.Namespace) -> tuple[dict, bool]:
    cm, _ = _load_crossed(args.input)
    doc, _base = load_json(args.psi)
    psi = parse_psi(doc, cm)
    h1 = h1_pointed(cm, args.budget)
    k = cr1(cm, psi, h1)
    return {
        "class": k,
        "distinguished": k == h1.distinguished,
        "representative": _cochain_doc(cm, h1.classes[k].representative),
    }, True


def cmd_delta2(args: argparse.Namespace) -> tuple[dict, bool]:
    cm, _ = _load_crossed(args.input)
    doc, _base = load_json(args.cocycle)
    z = parse_cocycle(doc, cm)
    ok = is_cocycle1(cm, z)
    if not ok:
        raise _Failure(f"not a 1-cocycle (witness {list(ok.witness)})")
    band, c = delta_coboundary(cm, z)
    N = cm.gamma.order
    neutral = is_neutral_class(band, c, args.budget)
    autos = band.out.automorphisms
    return {
        "band": {cm.gamma.name(s): list(p) for s, p in zip(cm.gamma.elements, band.representatives())},
        "cocycle": {
            "u": [[cm.A.name(c.u[s * N + t]) for t in range(N)] for s in range(N)],
            "f": {cm.gamma.name(s): list(autos[k]) for s, k in enumerate(c.f)},
        },
        "is_2_cocycle": is_cocycle2(band, c).ok,
        "neutral": neutral.neutral,
        "witness": [cm.A.name(a) for a in neutral.witness] if neutral.witness else None,
    }, True


def cmd_module_h1(args: argparse.Namespace) -> tuple[dict, bool]:
    m = parse_document(args.input)
    if not isinstance(m, GammaModule):
        raise SchemaError(args.input, "expected a module document")
    h1 = mod_h1(m, args.linalg_budget)
    h0 = mod_h0(m, args.linalg_budget)
    gam = m.gamma
    return {
        "H1": {
            "invariant_factors": list(h1.invariant_factors),
            "rank": h1.rank,
            "generators": [
                {gam.name(s): list(v) for s, v in enumerate(c)} for c in h1.generators
            ],
        },
        "H0": {
            "invariant_factors": list(h0.invariant_factors),
            "rank": h0.rank,
            "generators": [list(v) for v in h0.generators],
        },
        "module": {"invariant_factors": list(m.module.invariant_factors), "rank": m.module.rank},
    }, True


def cmd_scenario(args: argparse.Namespace) -> tuple[dict, bool]:
    options: dict[str, Any] = {"seed": args.seed, "budget": args.budget}
    if args.name == "unitary":
        options["n"] = args.n
    if args.name == "axioms":
        options["random_count"] = args.random
    rep = run_scenario(args.name, **options)
    args.render_text = rep.to_text
    return rep.to_dict(), rep.passed


# ---------------------------------------------------------------------------


def _text(payload: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return "\n".join(lines)
    if isinstance(payload, list):
        return "\n".join(
            (f"{pad}-\n{_text(v, indent + 1)}" if isinstance(v, (dict, list)) and not _flat(v) else f"{pad}- {_inline(v)}")
            for v in payload
        )
    return f"{pad}{_inline(payload)}"


def _flat(v: Any) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)
    return False


def _inline(v: Any) -> str:
    return json.dumps(v, ensure_ascii=False) if isinstance(v, (list, dict)) else str(v)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="crossedcoh",
        description="Hypercohomology of finite crossed modules and cohomology of integral Γ-modules.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="enumeration budget (default: $CROSSEDCOH_BUDGET or 10^8)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, needs_input: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        if needs_input:
            sp.add_argument("--input", required=True, help="JSON document")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "validate a group, Γ-group, crossed module or module document")
    add("h1", cmd_h1, "pointed H¹ of a crossed module")
    add("h1-abelian", cmd_h1_abelian, "group structure on H¹ from a braiding")
    add("cr1", cmd_cr1, "class of (1, ψ) for a G-valued cocycle ψ").add_argument(
        "--psi", required=True, help='JSON document {"psi": [...]}')
    add("delta2", cmd_delta2, "band-valued 2-cocycle Δ(u, ψ) and its neutrality").add_argument(
        "--cocycle", required=True, help='JSON document {"u": [[...]], "psi": [...]}')
    mh = add("module-h1", cmd_module_h1, "H⁰ and H¹ of a finitely generated Γ-module")
    mh.add_argument("--linalg-budget", type=int, default=None,
                    help="maximum number of unknowns in the cocycle system")
    sc = add("scenario", cmd_scenario, "run a named reproduction", needs_input=False)
    sc.add_argument("name", choices=SCENARIOS)
    sc.add_argument("--n", type=int, default=2, help="lattice parameter for 'unitary'")
    sc.add_argument("--random", type=int, default=20, help="random instances for 'axioms'")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.budget = resolve_budget(args.budget)
    try:
        payload, passed = args.func(args)
    except (CrossedCohError, _Failure) as e:
        err = {"error": type(e).__name__, "message": str(e)}
        if args.format == "json":
            print(json.dumps(err, sort_keys=True))
        else:
            print(f"error: {err['error']}: {err['message']}")
        return 2
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        render = getattr(args, "render_text", None)
        print(render() if render else _text(payload))
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
