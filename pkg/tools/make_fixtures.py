"""Regenerate the JSON fixtures under src/crossedcoh/data from the builders.

Crossed-module documents refer to shared group files by relative path, so
the files also exercise path references.
"""

import json
from pathlib import Path

from crossedcoh.crossed import trivial_braiding
from crossedcoh.fixtures import (
    Q8, V4, Z2, a3_in_s3, crossed_fixture, gamma_z2, klein_gamma, one_to_v4,
    q8_v4_swap, z2_bilinear, z2_to_one, z4_to_z2,
)
from crossedcoh.io import serialize
from crossedcoh.modules import build_zmod8_sequence, build_unitary_example, fg_group, make_gamma_module

DATA = Path(__file__).resolve().parents[1] / "src" / "crossedcoh" / "data"


def write(rel: str, doc) -> None:
    path = DATA / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n")


def with_refs(doc: dict, gamma_file: str) -> dict:
    """Replace inline Γ groups by a path to a shared file."""
    for key in ("A", "G"):
        doc[key]["gamma"] = gamma_file
    return doc


def main() -> None:
    write("groups/q8.json", serialize(Q8))
    write("groups/v4.json", serialize(V4))
    write("groups/z2.json", serialize(Z2))
    write("groups/gamma_z2.json", serialize(gamma_z2()))
    write("groups/gamma_klein.json", serialize(klein_gamma()))

    q8v4 = serialize(crossed_fixture("q8_v4").braiding)
    q8v4["A"]["group"] = "groups/q8.json"
    q8v4["G"]["group"] = "groups/v4.json"
    write("q8_v4.json", with_refs(q8v4, "groups/gamma_z2.json"))
    write("q8_v4_swap.json", with_refs(serialize(crossed_fixture("q8_v4_swap").braiding), "groups/gamma_z2.json"))
    cm = one_to_v4()
    write("one_to_v4.json", with_refs(serialize(trivial_braiding(cm)), "groups/gamma_z2.json"))
    cm = z2_to_one()
    write("z2_to_one.json", with_refs(serialize(trivial_braiding(cm)), "groups/gamma_z2.json"))
    write("z2_bilinear.json", with_refs(serialize(z2_bilinear()[1]), "groups/gamma_z2.json"))
    write("s3_identity.json", with_refs(serialize(crossed_fixture("s3_identity").braiding), "groups/gamma_z2.json"))
    write("a3_in_s3.json", with_refs(serialize(a3_in_s3()), "groups/gamma_z2.json"))
    cm = z4_to_z2()
    write("z4_to_z2.json", with_refs(serialize(trivial_braiding(cm)), "groups/gamma_z2.json"))

    write("psi_b1.json", {"psi": ["1", "b1"]})
    write("psi_b1b2.json", {"psi": ["1", "b1b2"]})
    write("cocycle_b1.json", {"u": [["1", "1"], ["1", "-1"]], "psi": ["1", "b1"]})
    write("cocycle_z2_nonneutral.json", {"u": [["1", "1"], ["1", "-1"]], "psi": [0, 0]})

    sign = make_gamma_module(fg_group(1, []), gamma_z2(), [[[1]], [[-1]]])
    doc = serialize(sign)
    doc["gamma"] = "../groups/gamma_z2.json"
    write("modules/z_sign.json", doc)
    for n in (1, 2):
        mx, msc, _ = build_unitary_example(n)
        write(f"modules/unitary_x_n{n}.json", serialize(mx))
        write(f"modules/unitary_xsc_n{n}.json", serialize(msc))
    ses = build_zmod8_sequence()
    for part, mod in (("a", ses.A), ("b", ses.B), ("c", ses.C)):
        doc = serialize(mod)
        doc["gamma"] = "../groups/gamma_klein.json"
        write(f"modules/zmod8_{part}.json", doc)


if __name__ == "__main__":
    main()
