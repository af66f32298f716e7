import itertools
import random

from hypothesis import given, settings, strategies as st

from crossedcoh.braided import (
    all_cochains0,
    c0_inv,
    c0_mul,
    c1_inv,
    c1_inv_displayed,
    c1_mul,
    diff_d,
    h1_abelian,
    image_of_d,
    is_group_hom,
    is_symmetric_braiding,
    random_cochain0,
    random_cochain1,
    validate_dbar_structures,
)
from crossedcoh.crossed import Braiding, commutator_braiding, trivial_braiding, validate_braiding
from crossedcoh.fixtures import (
    B1, B1B2, B2, Q8_I, Q8_MINUS_ONE, crossed_fixture, crossed_fixtures, gamma_trivial, one_to_v4, q8_v4,
    z2_bilinear, z2_to_one, z4_to_z2,
)
from crossedcoh.hyper import Cochain0, Cochain1, coboundary0, enumerate_z1, h1_pointed, is_cocycle1, unit_cochain0, unit_cochain1

BRAIDED = [f for f in crossed_fixtures() if f.braiding is not None]


def q8_braiding():
    return commutator_braiding(q8_v4())


def test_c0_identity():
    b = q8_braiding()
    e = unit_cochain0(b.base)
    for x in all_cochains0(b.base):
        assert c0_mul(b, x, e) == x == c0_mul(b, e, x)


def test_c0_law_without_braiding_terms():
    # trivial braiding: φ^{12}_σ = φ¹_σ · ^{^σg₁}φ²_σ
    for cm in (one_to_v4(), z2_to_one(), z4_to_z2()):
        b = trivial_braiding(cm)
        A = cm.A
        for x, y in itertools.product(all_cochains0(cm), repeat=2):
            expect = tuple(
                A.table[x.phi[s]][cm.theta[cm.gammaG.action[s][x.g]][y.phi[s]]] for s in cm.gamma.elements
            )
            assert c0_mul(b, x, y) == Cochain0(expect, cm.G.table[x.g][y.g])


def test_c0_inverses_exhaustive():
    b = q8_braiding()
    e = unit_cochain0(b.base)
    for x in all_cochains0(b.base):
        assert c0_mul(b, x, c0_inv(b, x)) == e


def test_c1_identity_two_sided():
    b = q8_braiding()
    e = unit_cochain1(b.base)
    rng = random.Random(0)
    for _ in range(200):
        x = random_cochain1(b.base, rng)
        assert c1_mul(b, x, e) == x == c1_mul(b, e, x)


def test_product_of_b1_and_b2_lifts():
    b = q8_braiding()
    cm = b.base
    z1 = Cochain1((0, 0, 0, 0), (0, B1))
    z2 = Cochain1((0, 0, 0, 0), (0, B2))
    prod = c1_mul(b, z1, z2)
    assert prod.psi == (0, B1B2)
    assert is_cocycle1(cm, prod)
    # the braiding correction ^{ψ¹_γ}{^γψ¹_γ, ψ²_γ} = ^{b1}{b1, b2} = −1 shows up in u_{γ,γ}
    assert prod.u[3] == cm.theta[B1][b(B1, B2)] == Q8_MINUS_ONE


def test_inverse_of_cocycles_exhaustive():
    for fx in BRAIDED:
        for z in enumerate_z1(fx.cm):
            zi = c1_inv(fx.braiding, z)
            assert is_cocycle1(fx.cm, zi)
            assert c1_inv_displayed(fx.braiding, z) == zi


def test_d_examples():
    b = q8_braiding()
    cm = b.base
    assert diff_d(b, unit_cochain0(cm)) == unit_cochain1(cm)
    assert diff_d(b, Cochain0((0, 0), B1)) == unit_cochain1(cm)
    for fx in BRAIDED:
        for s in fx.cm.A.elements:
            assert diff_d(fx.braiding, coboundary0(fx.cm, s)) == unit_cochain1(fx.cm)


def test_h1_abelian_examples():
    ab = h1_abelian(trivial_braiding(one_to_v4()))
    assert (ab.order, ab.exponent, ab.invariant_factors) == (4, 2, (2, 2))
    ab = h1_abelian(q8_braiding())
    assert ab.order == 2
    nontrivial = 1 - ab.identity
    assert ab.mul(nontrivial, nontrivial) == ab.identity
    ab = h1_abelian(commutator_braiding(q8_v4(gamma_trivial())))
    assert ab.order == 1


def test_h1_abelian_on_fixtures():
    for fx in BRAIDED:
        ab = h1_abelian(fx.braiding)
        t = ab.mul_table
        n = ab.order
        assert n == len(h1_pointed(fx.cm))
        assert ab.is_abelian, fx.name
        for i, j, k in itertools.product(range(n), repeat=3):
            assert t[t[i][j]][k] == t[i][t[j][k]]
        for i in range(n):
            assert t[i][ab.identity] == i and t[i][ab.inverse[i]] == ab.identity


def test_z2_bilinear_invariants():
    cm, b = z2_bilinear()
    assert is_symmetric_braiding(b) and not validate_braiding(b, "picard").ok
    assert h1_abelian(b).invariant_factors == (2, 4)


def test_image_of_d_is_the_unit_orbit():
    for fx in BRAIDED:
        h1 = h1_pointed(fx.cm)
        unit_orbit = set(h1.orbits()[h1.distinguished])
        assert image_of_d(fx.braiding) == unit_orbit, fx.name


def test_dbar_checks_on_fixtures():
    for fx in BRAIDED:
        rep = validate_dbar_structures(fx.braiding)
        assert rep.ok, (fx.name, rep.failed())


def test_trivial_correction_terms_on_unit_module():
    b = trivial_braiding(one_to_v4())
    rep = validate_dbar_structures(b)
    assert rep.ok and "Pic" in rep.results


def test_corrupted_pairing():
    b = q8_braiding()
    pairing = [list(r) for r in b.pairing]
    pairing[B1][B2] = Q8_I  # ρ(i) = b1 is not the commutator [b1, b2] = 1
    bad = Braiding(b.base, tuple(tuple(r) for r in pairing))
    rep = validate_braiding(bad)
    assert "Br1" in rep.failed() and rep.results["Br1"].witness == (B1, B2)
    assert not validate_dbar_structures(bad).ok


def test_induced_map_not_a_homomorphism():
    from crossedcoh.fixtures import v4_inclusion
    from crossedcoh.hyper import h1_induced

    m = v4_inclusion()
    src, tgt = h1_abelian(trivial_braiding(m.source)), h1_abelian(commutator_braiding(m.target))
    f = h1_induced(m, src.pointed, tgt.pointed)
    ok, pair = is_group_hom(f, src, tgt)
    assert not ok
    i, j = pair
    assert f[src.mul(i, j)] != tgt.mul(f[i], f[j])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([f.name for f in BRAIDED]), st.integers(0, 10**6))
def test_group_laws_random(name, seed):
    fx = crossed_fixture(name)
    b, cm = fx.braiding, fx.cm
    rng = random.Random(seed)
    x, y, z = (random_cochain0(cm, rng) for _ in range(3))
    assert c0_mul(b, c0_mul(b, x, y), z) == c0_mul(b, x, c0_mul(b, y, z))
    assert c0_mul(b, c0_inv(b, x), x) == unit_cochain0(cm)
    assert diff_d(b, c0_mul(b, x, y)) == c1_mul(b, diff_d(b, x), diff_d(b, y))
    p, q, r = (random_cochain1(cm, rng) for _ in range(3))
    assert c1_mul(b, c1_mul(b, p, q), r) == c1_mul(b, p, c1_mul(b, q, r))
    assert c1_mul(b, p, c1_inv(b, p)) == unit_cochain1(cm) == c1_mul(b, c1_inv(b, p), p)
