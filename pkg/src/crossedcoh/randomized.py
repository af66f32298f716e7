"""Seeded generators of valid braided crossed modules for property sweeps.

Two families:

* commutator type: H → H/K for a Γ-stable central K ≤ H, conjugation through
  lifts, commutator-of-lifts braiding (always Picard);
* bilinear type: ρ: A → G between elementary abelian 2-groups with trivial
  θ and a pairing that is bilinear, takes values in ker ρ and vanishes on
  im ρ in each variable (braided; symmetric or Picard when the pairing is).

Γ ranges over the cyclic groups of order 1 to 4 and the Klein four-group.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .crossed import Braiding, CrossedModule, commutator_braiding
from .groups import (
    FiniteGroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    homomorphisms,
    make_gamma_group,
    make_group,
    permutation_group,
    quaternion_group,
    quotient_group,
    symmetric_group,
    trivial_action,
)

MAX_C0 = 20000  # cap on |A|^|Γ|·|G|
SWEEP_BUDGET = 10**40  # the |G|^N·|A|^(N²) bound is far above the pruned search
MAX_Z1 = 6000  # cap on |Z¹|; together these keep each sweep instance around a second


@dataclass(frozen=True)
class RandomInstance:
    name: str
    braiding: Braiding
    mode: str

    @property
    def cm(self) -> CrossedModule:
        return self.braiding.base


@lru_cache(maxsize=None)
def gammas() -> tuple[tuple[str, FiniteGroup], ...]:
    return (
        ("C1", cyclic_group(1)),
        ("C2", cyclic_group(2)),
        ("C3", cyclic_group(3)),
        ("C4", cyclic_group(4)),
        ("V4", direct_product(cyclic_group(2), cyclic_group(2))),
    )


@lru_cache(maxsize=None)
def base_groups() -> tuple[tuple[str, FiniteGroup], ...]:
    return (
        ("Z4", cyclic_group(4)),
        ("S3", symmetric_group(3)),
        ("Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))),
        ("Z6", cyclic_group(6)),
        ("Q8", quaternion_group()),
        ("D4", dihedral_group(4)),
        ("Z4xZ2", direct_product(cyclic_group(4), cyclic_group(2))),
        ("Z2^3", direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))),
        ("D6", dihedral_group(6)),
        ("A4", permutation_group([(1, 2, 0, 3), (0, 2, 3, 1)])),
        ("Q8xZ2", direct_product(quaternion_group(), cyclic_group(2))),
        ("D8", dihedral_group(8)),
        ("D4xZ2", direct_product(dihedral_group(4), cyclic_group(2))),
    )


@lru_cache(maxsize=None)
def _gamma_actions(gamma_name: str, group_name: str) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All homomorphisms Γ → Aut(H), as per-γ permutation tuples."""
    gamma = dict(gammas())[gamma_name]
    H = dict(base_groups())[group_name]
    auts = homomorphisms(H, H, bijective=True)
    if gamma.order == 1:
        return ((tuple(H.elements),),)
    aut_group = make_group(
        [[auts.index(tuple(p[q[x]] for x in H.elements)) for q in auts] for p in auts]
    )
    return tuple(
        tuple(auts[k] for k in hom) for hom in homomorphisms(gamma, aut_group)
    )


def _subgroups_of_center(H: FiniteGroup) -> list[frozenset[int]]:
    center = sorted(H.center)
    subs = {H.generated(gs) for r in range(3) for gs in product(center, repeat=r)}
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def commutator_instance(rng: random.Random) -> RandomInstance | None:
    gname, gamma = rng.choice(gammas())
    hname, H = rng.choice(base_groups())
    action = rng.choice(_gamma_actions(gname, hname))
    stable = [K for K in _subgroups_of_center(H) if all(frozenset(p[k] for k in K) == K for p in action)]
    K = rng.choice(stable)
    Q, proj = quotient_group(H, K)
    if H.order**gamma.order * Q.order > MAX_C0:
        return None
    lifts = [proj.index(q) for q in Q.elements]
    q_action = [tuple(proj[p[lifts[q]]] for q in Q.elements) for p in action]
    gA = make_gamma_group(gamma, H, action)
    gG = make_gamma_group(gamma, Q, q_action)
    theta = tuple(tuple(H.conj(lifts[q], s) for s in H.elements) for q in Q.elements)
    cm = CrossedModule(gA, gG, tuple(proj), theta)
    name = f"commutator:{hname}/{len(K)}:{gname}:{_gamma_actions(gname, hname).index(action)}"
    return RandomInstance(name, commutator_braiding(cm), "picard")


def _f2_group(k: int) -> FiniteGroup:
    n = 1 << k
    return make_group([[a ^ b for b in range(n)] for a in range(n)])


def _dot(x: int, y: int) -> int:
    return bin(x & y).count("1") & 1


def bilinear_instance(rng: random.Random) -> RandomInstance | None:
    gname, gamma = rng.choice(gammas())
    m, k = rng.randint(1, 3), rng.randint(1, 3)
    A, G = _f2_group(m), _f2_group(k)
    if A.order**gamma.order * G.order > MAX_C0:
        return None
    # ρ(x)_i = <row_i, x>
    rows = [rng.randrange(1 << m) if rng.random() < 0.6 else 0 for _ in range(k)]
    rho = tuple(sum(_dot(r, x) << i for i, r in enumerate(rows)) for x in A.elements)
    kernel = [x for x in A.elements if rho[x] == 0]
    image = sorted(set(rho))
    # pairing coefficients on basis pairs, valued in ker ρ
    coef = {(i, j): rng.choice(kernel) for i in range(k) for j in range(k)}
    shape = rng.choice(("any", "symmetric", "alternating"))
    if shape != "any":
        for i in range(k):
            for j in range(i):
                coef[(i, j)] = coef[(j, i)]
            if shape == "alternating":
                coef[(i, i)] = 0

    def pair(g: int, h: int) -> int:
        out = 0
        for i in range(k):
            if g >> i & 1:
                for j in range(k):
                    if h >> j & 1:
                        out ^= coef[(i, j)]
        return out

    if any(pair(r, g) or pair(g, r) for r in image for g in G.elements):
        # the pairing must vanish on im ρ; reject and let the caller redraw
        return None
    pairing = tuple(tuple(pair(g, h) for h in G.elements) for g in G.elements)
    cm = CrossedModule(
        trivial_action(gamma, A),
        trivial_action(gamma, G),
        rho,
        tuple(tuple(A.elements) for _ in G.elements),
    )
    mode = {"any": "braided", "symmetric": "symmetric", "alternating": "picard"}[shape]
    name = f"bilinear:F2^{m}->F2^{k}:{shape}:{gname}"
    return RandomInstance(name, Braiding(cm, pairing), mode)


def random_instances(count: int, seed: int = 0, max_z1: int = MAX_Z1) -> list[RandomInstance]:
    """``count`` valid braided crossed modules, deterministic in ``seed``."""
    from .hyper import enumerate_z1

    rng = random.Random(seed)
    out: list[RandomInstance] = []
    while len(out) < count:
        make = commutator_instance if rng.random() < 0.6 else bilinear_instance
        inst = make(rng)
        if inst is not None and len(enumerate_z1(inst.cm, SWEEP_BUDGET)) <= max_z1:
            out.append(inst)
    return out
