"""Named crossed modules, braidings and morphisms used by tests and scenarios.

Element conventions:

* Q₈ is ordered 1, -1, i, -i, j, -j, k, -k.
* V₄ = Q₈/{±1} is ordered 1, b1, b2, b1b2 where b1 is the image of i and
  b2 the image of j (so the lifts anticommute).
* ℤ/2 as the degree −1 group of ℤ/2 → 1 is ordered 1, -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .crossed import (
    Braiding,
    CrossedModule,
    CrossedMorphism,
    commutator_braiding,
    identity_morphism,
    kernel_crossed_module,
    trivial_braiding,
    unit_crossed_module,
)
from .groups import (
    FiniteGroup,
    GammaGroup,
    cyclic_group,
    direct_product,
    make_group,
    make_gamma_group,
    quaternion_group,
    quotient_group,
    symmetric_group,
    trivial_action,
)

Q8 = quaternion_group()
Q8_MINUS_ONE = 1
Q8_I, Q8_J, Q8_K = 2, 4, 6

_v4, _q8_to_v4 = quotient_group(Q8, [0, Q8_MINUS_ONE])
V4 = make_group(_v4.table, ["1", "b1", "b2", "b1b2"])
Q8_TO_V4 = _q8_to_v4
B1, B2, B1B2 = 1, 2, 3
assert Q8_TO_V4[Q8_I] == B1 and Q8_TO_V4[Q8_J] == B2

Z2 = make_group(cyclic_group(2).table, ["1", "-1"])
TRIVIAL = make_group([[0]])


def klein_gamma() -> FiniteGroup:
    """(ℤ/2)² = {1, σ, τ, στ}."""
    return make_group(direct_product(cyclic_group(2), cyclic_group(2)).table, ["1", "tau", "sigma", "sigma*tau"])


def gamma_z2() -> FiniteGroup:
    return make_group(cyclic_group(2).table, ["1", "gamma"])


def gamma_trivial() -> FiniteGroup:
    return make_group([[0]], ["1"])


def _lift_conjugation(A: FiniteGroup, proj: tuple[int, ...], order_g: int) -> tuple[tuple[int, ...], ...]:
    """θ_g(s) = g̃ s g̃⁻¹ through the least lift g̃ of g."""
    lifts = [proj.index(g) for g in range(order_g)]
    return tuple(tuple(A.conj(lifts[g], s) for s in A.elements) for g in range(order_g))


def q8_v4(gamma: FiniteGroup | None = None) -> CrossedModule:
    """Q₈ → V₄ with conjugation through lifts; Γ acts trivially."""
    gamma = gamma or gamma_z2()
    return CrossedModule(
        trivial_action(gamma, Q8),
        trivial_action(gamma, V4),
        Q8_TO_V4,
        _lift_conjugation(Q8, Q8_TO_V4, 4),
    )


def q8_v4_swap() -> CrossedModule:
    """Q₈ → V₄ with ℤ/2 swapping i ↔ j (hence k ↦ -k) and b1 ↔ b2."""
    gamma = gamma_z2()
    swap_q8 = (0, 1, 4, 5, 2, 3, 7, 6)
    swap_v4 = (0, 2, 1, 3)
    ident_q8, ident_v4 = tuple(range(8)), tuple(range(4))
    return CrossedModule(
        make_gamma_group(gamma, Q8, [ident_q8, swap_q8]),
        make_gamma_group(gamma, V4, [ident_v4, swap_v4]),
        Q8_TO_V4,
        _lift_conjugation(Q8, Q8_TO_V4, 4),
    )


def one_to_v4(gamma: FiniteGroup | None = None) -> CrossedModule:
    return unit_crossed_module(trivial_action(gamma or gamma_z2(), V4))


def z2_to_one(gamma: FiniteGroup | None = None) -> CrossedModule:
    return kernel_crossed_module(trivial_action(gamma or gamma_z2(), Z2))


def s3_identity(gamma: FiniteGroup | None = None) -> CrossedModule:
    """id: S₃ → S₃, conjugation action; Γ = ℤ/2 acting by an inner automorphism."""
    gamma = gamma or gamma_z2()
    S3 = symmetric_group(3)
    t = 1  # a transposition in lexicographic permutation order
    assert S3.element_orders[t] == 2
    conj_t = tuple(S3.conj(t, x) for x in S3.elements)
    act = [tuple(S3.elements), conj_t]
    ga = make_gamma_group(gamma, S3, act)
    theta = tuple(tuple(S3.conj(g, s) for s in S3.elements) for g in S3.elements)
    return CrossedModule(ga, ga, tuple(S3.elements), theta)


def a3_in_s3(gamma: FiniteGroup | None = None) -> CrossedModule:
    """Inclusion A₃ ⊂ S₃ with the conjugation action; coker is ℤ/2."""
    gamma = gamma or gamma_z2()
    S3 = symmetric_group(3)
    alt = sorted(x for x in S3.elements if S3.element_orders[x] != 2)
    pos = {x: i for i, x in enumerate(alt)}
    A3 = make_group([[pos[S3.table[a][b]] for b in alt] for a in alt])
    theta = tuple(tuple(pos[S3.conj(g, a)] for a in alt) for g in S3.elements)
    return CrossedModule(trivial_action(gamma, A3), trivial_action(gamma, S3), tuple(alt), theta)


def z2_bilinear(gamma: FiniteGroup | None = None) -> tuple[CrossedModule, Braiding]:
    """ℤ/2 → (ℤ/2)² with ρ = 1, trivial θ, and a symmetric non-Picard pairing.

    The pairing is the dot product over 𝔽₂, so {g, g} ≠ 1 for g = (1,0).
    """
    gamma = gamma or gamma_z2()
    G = direct_product(cyclic_group(2), cyclic_group(2))
    A = cyclic_group(2)
    cm = CrossedModule(
        trivial_action(gamma, A),
        trivial_action(gamma, G),
        (0, 0),
        tuple((0, 1) for _ in G.elements),
    )
    bits = [(g >> 1, g & 1) for g in G.elements]
    pairing = tuple(
        tuple((bits[g][0] * bits[h][0] + bits[g][1] * bits[h][1]) % 2 for h in G.elements)
        for g in G.elements
    )
    return cm, Braiding(cm, pairing)


def z4_to_z2() -> CrossedModule:
    """ℤ/4 → ℤ/2 reduction, Γ = ℤ/2 acting by −1 on ℤ/4 (trivially on ℤ/2)."""
    gamma = gamma_z2()
    Z4 = cyclic_group(4)
    G = cyclic_group(2)
    return CrossedModule(
        make_gamma_group(gamma, Z4, [(0, 1, 2, 3), (0, 3, 2, 1)]),
        trivial_action(gamma, G),
        (0, 1, 0, 1),
        tuple(tuple(Z4.elements) for _ in G.elements),
    )


@dataclass(frozen=True)
class CrossedFixture:
    name: str
    cm: CrossedModule
    braiding: Braiding | None
    mode: str | None  # strongest braiding mode expected to hold
    expected_h1: int | None = None


def crossed_fixtures() -> list[CrossedFixture]:
    """Every shipped crossed-module fixture, with its braiding when it has one."""
    out = []
    cm = q8_v4()
    out.append(CrossedFixture("q8_v4", cm, commutator_braiding(cm), "picard", 2))
    cm = q8_v4(gamma_trivial())
    out.append(CrossedFixture("q8_v4_trivial_gamma", cm, commutator_braiding(cm), "picard", 1))
    cm = q8_v4_swap()
    out.append(CrossedFixture("q8_v4_swap", cm, commutator_braiding(cm), "picard", None))
    cm = one_to_v4()
    out.append(CrossedFixture("one_to_v4", cm, trivial_braiding(cm), "picard", 4))
    cm = z2_to_one()
    out.append(CrossedFixture("z2_to_one", cm, trivial_braiding(cm), "picard", 2))
    cm = s3_identity()
    out.append(CrossedFixture("s3_identity", cm, commutator_braiding(cm), "picard", 1))
    cm = a3_in_s3()
    out.append(CrossedFixture("a3_in_s3", cm, None, None, None))
    cm, br = z2_bilinear()
    out.append(CrossedFixture("z2_bilinear", cm, br, "symmetric", None))
    cm = z4_to_z2()
    out.append(CrossedFixture("z4_to_z2", cm, trivial_braiding(cm), "picard", None))
    return out


def crossed_fixture(name: str) -> CrossedFixture:
    for f in crossed_fixtures():
        if f.name == name:
            return f
    raise KeyError(name)


def v4_inclusion() -> CrossedMorphism:
    """(1 → V₄) → (Q₈ → V₄)."""
    return CrossedMorphism(one_to_v4(), q8_v4(), (0,), tuple(V4.elements))


def kernel_inclusion() -> CrossedMorphism:
    """(ℤ/2 → 1) → (Q₈ → V₄) sending -1 to -1; a quasi-isomorphism."""
    return CrossedMorphism(z2_to_one(), q8_v4(), (0, Q8_MINUS_ONE), (0,))


def to_trivial(cm: CrossedModule) -> CrossedMorphism:
    """Morphism onto the crossed module 1 → 1."""
    target = unit_crossed_module(trivial_action(cm.gamma, TRIVIAL))
    return CrossedMorphism(cm, target, tuple(0 for _ in cm.A.elements), tuple(0 for _ in cm.G.elements))


def fixture_morphisms() -> list[tuple[str, CrossedMorphism, bool]]:
    """(name, morphism, is a quasi-isomorphism)."""
    cm = q8_v4()
    return [
        ("identity_q8_v4", identity_morphism(cm), True),
        ("kernel_inclusion", kernel_inclusion(), True),
        ("v4_inclusion", v4_inclusion(), False),
        ("q8_v4_to_trivial", to_trivial(cm), False),
        ("identity_s3", identity_morphism(s3_identity()), True),
    ]
