import json

import pytest

from crossedcoh import fixtures
from crossedcoh.crossed import Braiding, CrossedModule
from crossedcoh.errors import SchemaError
from crossedcoh.groups import GammaGroup, cyclic_group, make_group
from crossedcoh.hyper import Cochain1
from crossedcoh.io import (
    document_kind,
    dumps,
    parse_cocycle,
    parse_document,
    parse_psi,
    parse_value,
    serialize,
)
from crossedcoh.modules import build_zmod8_sequence, build_unitary_example


def roundtrip(obj):
    return parse_value(json.loads(dumps(obj)))


def same_module(a, b):
    return (
        a.module.relations == b.module.relations
        and a.module.generators == b.module.generators
        and a.gamma == b.gamma
        and [list(map(list, m)) for m in a.action] == [list(map(list, m)) for m in b.action]
    )


@pytest.mark.parametrize("fx", fixtures.crossed_fixtures(), ids=lambda f: f.name)
def test_crossed_roundtrip(fx):
    obj = fx.braiding if fx.braiding is not None else fx.cm
    back = roundtrip(obj)
    assert type(back) is type(obj)
    assert serialize(back) == serialize(obj)
    cm = back.base if isinstance(back, Braiding) else back
    assert cm.rho == fx.cm.rho and cm.theta == fx.cm.theta


def test_group_roundtrip_including_trivial():
    for g in (make_group([[0]]), cyclic_group(5), fixtures.klein_gamma()):
        assert roundtrip(g) == g


def test_module_roundtrip():
    mx, msc, _ = build_unitary_example(2)
    for m in (mx, msc, build_zmod8_sequence().B):
        assert same_module(roundtrip(m), m)


def test_cochain_roundtrip():
    cm = fixtures.q8_v4()
    z = Cochain1(tuple(range(4)), (0, 1))
    doc = json.loads(json.dumps(serialize(z)))
    assert parse_cocycle(doc, cm) == z


def test_names_accepted_for_elements(data_dir):
    br = parse_document(data_dir / "q8_v4.json")
    assert isinstance(br, Braiding)
    cm = br.base
    assert cm.A.order == 8 and cm.G.order == 4
    psi = parse_psi(json.loads((data_dir / "psi_b1.json").read_text()), cm)
    assert psi == (cm.G.identity, cm.G.index_of("b1"))
    c = parse_cocycle(json.loads((data_dir / "cocycle_b1.json").read_text()), cm)
    assert c.psi == psi


def test_all_shipped_documents_parse(data_dir):
    kinds = {}
    for p in sorted(data_dir.rglob("*.json")):
        doc = json.loads(p.read_text())
        kinds[p.name] = document_kind(doc)
        if kinds[p.name] in ("group", "crossed-module", "module", "gamma-group"):
            parse_document(p)
    assert kinds["q8.json"] == "group"
    assert kinds["z2_bilinear.json"] == "crossed-module"
    assert kinds["z_sign.json"] == "module"
    assert kinds["psi_b1.json"] == "psi"
    assert kinds["cocycle_b1.json"] == "cocycle"
    assert isinstance(parse_document(data_dir / "z2_bilinear.json"), Braiding)


def test_path_reference_resolves_relative_to_referrer(tmp_path, data_dir):
    sub = tmp_path / "nested"
    sub.mkdir()
    (sub / "g.json").write_text((data_dir / "groups" / "gamma_z2.json").read_text())
    doc = {"generators": 1, "relations": [], "gamma": "nested/g.json"}
    gam = parse_document(data_dir / "groups" / "gamma_z2.json")
    names = [gam.name(g) for g in gam.elements]
    doc["action"] = {names[0]: [[1]], names[1]: [[-1]]}
    (tmp_path / "m.json").write_text(json.dumps(doc))
    m = parse_document(tmp_path / "m.json")
    assert m.module.rank == 1


@pytest.mark.parametrize(
    "doc, location",
    [
        ({"order": 1, "table": [[0]], "colour": 3}, "$"),
        ({"order": 2, "table": [[0, 1]]}, "$.table"),
        ({"order": 2, "table": [[0, 1], [1, 1]]}, "$"),
        ({"generators": 1, "relations": [[2, 3]], "gamma": {"order": 1, "table": [[0]]}, "action": {"0": [[1]]}}, "$.relations"),
        ({"generators": 1, "relations": [], "gamma": {"order": 1, "table": [[0]]}, "action": {"0": [[2]]}}, "$.action"),
        ({"generators": 1, "relations": [], "gamma": {"order": 1, "table": [[0]]}, "action": {"5": [[1]]}}, "$.action"),
        ([1, 2], "$"),
    ],
)
def test_schema_errors_carry_location(doc, location):
    with pytest.raises(SchemaError) as exc:
        parse_value(doc)
    assert exc.value.location == location


def test_nested_unknown_field_location(data_dir):
    doc = json.loads((data_dir / "q8_v4.json").read_text())
    doc["A"] = {"gamma": {"order": 1, "table": [[0]]}, "group": {"order": 1, "table": [[0]], "x": 0}, "action": {"0": [0]}}
    with pytest.raises(SchemaError) as exc:
        parse_value(doc, data_dir)
    assert exc.value.location == "$.A.group"


def test_bad_element_name_and_missing_file(tmp_path, data_dir):
    cm = parse_document(data_dir / "q8_v4.json").base
    with pytest.raises(SchemaError) as exc:
        parse_psi({"psi": ["1", "nope"]}, cm)
    assert "nope" in str(exc.value)
    with pytest.raises(SchemaError):
        parse_psi({"psi": ["1"]}, cm)
    with pytest.raises(SchemaError):
        parse_document(tmp_path / "absent.json")
    (tmp_path / "broken.json").write_text("{")
    with pytest.raises(SchemaError):
        parse_document(tmp_path / "broken.json")
    with pytest.raises(SchemaError):
        parse_value({"psi": [0]})


def test_gamma_group_document():
    gg = roundtrip(fixtures.q8_v4().gammaA)
    assert isinstance(gg, GammaGroup) and gg.group.order == 8
