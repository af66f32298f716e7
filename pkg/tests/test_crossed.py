import random

import pytest
from hypothesis import given, settings, strategies as st

from crossedcoh.crossed import (
    Braiding,
    CrossedModule,
    CrossedMorphism,
    braiding_preserved,
    check_quasi_iso,
    commutator_braiding,
    derived_identities,
    identity_morphism,
    kernel_coker_bijective,
    trivial_braiding,
    unit_crossed_module,
    validate_braiding,
    validate_crossed_module,
    validate_morphism,
)
from crossedcoh.errors import KernelNotCentral
from crossedcoh.fixtures import (
    B1, B2, Q8, Q8_I, Q8_J, Q8_MINUS_ONE, TRIVIAL, V4, crossed_fixtures, fixture_morphisms,
    gamma_z2, kernel_inclusion, one_to_v4, q8_v4, s3_identity, v4_inclusion,
)
from crossedcoh.groups import cyclic_group, direct_product, quotient_group, trivial_action
from crossedcoh.randomized import commutator_instance


def test_q8_v4_axioms():
    rep = validate_crossed_module(q8_v4())
    assert rep.ok, rep.failed()


def test_trivial_theta_breaks_cm1():
    cm = q8_v4()
    bad = CrossedModule(cm.gammaA, cm.gammaG, cm.rho, tuple(tuple(Q8.elements) for _ in V4.elements))
    rep = validate_crossed_module(bad)
    assert rep.failed() == ["CM1"]
    s, s2 = rep.results["CM1"].witness
    assert Q8.table[s][s2] != Q8.table[s2][s]
    # i and j are one such pair
    assert Q8.table[Q8_I][Q8_J] != Q8.table[Q8_J][Q8_I]


def test_unit_crossed_module_passes():
    for G in (V4, cyclic_group(3), direct_product(cyclic_group(2), cyclic_group(3))):
        assert validate_crossed_module(unit_crossed_module(trivial_action(gamma_z2(), G))).ok


def test_fixtures_are_crossed_modules():
    for fx in crossed_fixtures():
        assert validate_crossed_module(fx.cm).ok, fx.name
        if fx.braiding is not None:
            assert validate_braiding(fx.braiding, fx.mode).ok, fx.name
            assert derived_identities(fx.braiding).ok, fx.name


@pytest.mark.parametrize("mode", ["braided", "symmetric", "picard"])
def test_commutator_braiding_modes(mode):
    assert validate_braiding(commutator_braiding(q8_v4()), mode).ok


def test_trivial_braiding_with_noncommutative_image():
    cm = s3_identity()
    rep = validate_braiding(trivial_braiding(cm), "braided")
    assert "Br1" in rep.failed()
    g, h = rep.results["Br1"].witness
    assert cm.G.commutator(g, h) != cm.G.identity


def test_trivial_braiding_on_abelian_unit_module():
    cm = unit_crossed_module(trivial_action(gamma_z2(), V4))
    for mode in ("braided", "symmetric", "picard"):
        assert validate_braiding(trivial_braiding(cm), mode).ok


def test_derived_identities_and_unit():
    b = commutator_braiding(q8_v4())
    assert derived_identities(b).ok
    for fx in crossed_fixtures():
        if fx.braiding is None:
            continue
        e = fx.cm.G.identity
        for g in fx.cm.G.elements:
            assert fx.braiding(e, g) == fx.cm.A.identity == fx.braiding(g, e)


def test_derived_identities_catch_corruption():
    b = commutator_braiding(q8_v4())
    pairing = [list(r) for r in b.pairing]
    pairing[B1][B2] = 0
    bad = Braiding(b.base, tuple(tuple(r) for r in pairing))
    assert not derived_identities(bad).ok


def test_b1_b2_pairing_is_minus_one():
    b = commutator_braiding(q8_v4())
    assert b(B1, B2) == Q8_MINUS_ONE
    assert Q8.name(b(B1, B2)) == "-1"


def test_identity_map_gives_commutator_pairing():
    cm = s3_identity()
    b = commutator_braiding(cm)
    assert all(b(g, h) == cm.A.commutator(g, h) for g in cm.G.elements for h in cm.G.elements)
    assert validate_braiding(b, "picard").ok


def test_noncentral_kernel_rejected():
    i_sub = Q8.generated([Q8_I])
    Q, proj = quotient_group(Q8, i_sub)
    gam = gamma_z2()
    cm = CrossedModule(
        trivial_action(gam, Q8), trivial_action(gam, Q), proj,
        tuple(tuple(Q8.elements) for _ in Q.elements),
    )
    with pytest.raises(KernelNotCentral):
        commutator_braiding(cm)


def test_lift_choice_does_not_matter():
    cm = q8_v4()
    assert commutator_braiding(cm, "least") == commutator_braiding(cm, "greatest")


def test_braiding_preserved():
    m = v4_inclusion()
    ok, wit = braiding_preserved(m, trivial_braiding(m.source), commutator_braiding(m.target))
    assert not ok and wit == (B1, B2)
    cm = q8_v4()
    b = commutator_braiding(cm)
    assert braiding_preserved(identity_morphism(cm), b, b) == (True, None)
    one = unit_crossed_module(trivial_action(gamma_z2(), TRIVIAL))
    m = CrossedMorphism(one, cm, (0,), (0,))
    assert braiding_preserved(m, trivial_braiding(one), b)[0]


def test_morphisms_and_quasi_isos():
    for name, m, is_qi in fixture_morphisms():
        assert validate_morphism(m).ok, name
        assert check_quasi_iso(m) == is_qi, name
    ok, detail = kernel_coker_bijective(v4_inclusion())
    assert not ok and not detail["kernel_bijective"]
    assert check_quasi_iso(kernel_inclusion())


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_random_commutator_instances(seed):
    inst = None
    rng = random.Random(seed)
    while inst is None:
        inst = commutator_instance(rng)
    assert validate_crossed_module(inst.cm).ok
    b = inst.braiding
    assert validate_braiding(b, "picard").ok
    assert derived_identities(b).ok
    assert commutator_braiding(inst.cm, "greatest") == b
