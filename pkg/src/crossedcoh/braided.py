"""Group laws on C⁰ and C¹ from a braiding, the differential d, the crossed
module d̄: C⁰/B⁰ → Z¹ with its braiding, and the abelian group H¹ = coker d̄."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .crossed import Braiding, CrossedModule, CrossedMorphism, ValidationReport
from .errors import NonNormalImage
from .groups import abelian_invariants
from .hyper import (
    Cochain0,
    Cochain1,
    H1Result,
    act_c0,
    c0_generators,
    coboundary0,
    h1_induced,
    h1_pointed,
    is_cocycle1,
    tables,
    unit_cochain0,
    unit_cochain1,
)


def c0_mul(b: Braiding, x: Cochain0, y: Cochain0) -> Cochain0:
    """Braided product on 0-cochains.

    (φ¹,g₁)(φ²,g₂)_σ = ^{g₁}{g₁⁻¹ρ(φ¹_σ)^σg₁, g₂}⁻¹ · φ¹_σ · ^{^σg₁}φ²_σ
    """
    T = tables(b.base)
    At, Ai, Gt, Gi, rho, th, actG, br = T.At, T.Ai, T.Gt, T.Gi, T.rho, T.th, T.actG, b.pairing
    (phi1, g1), (phi2, g2) = x, y
    g1i = Gi[g1]
    th1 = th[g1]
    out = []
    for s in range(T.N):
        sg1 = actG[s][g1]
        inner = Gt[Gt[g1i][rho[phi1[s]]]][sg1]
        corr = Ai[th1[br[inner][g2]]]
        out.append(At[At[corr][phi1[s]]][th[sg1][phi2[s]]])
    return Cochain0(tuple(out), Gt[g1][g2])


def c0_inv(b: Braiding, x: Cochain0) -> Cochain0:
    """φ'_σ = ^{^σg⁻¹}φ_σ⁻¹ · ^{^σg⁻¹·g}{g⁻¹ρ(φ_σ)^σg, g⁻¹}, with g' = g⁻¹."""
    T = tables(b.base)
    At, Ai, Gt, Gi, rho, th, actG, br = T.At, T.Ai, T.Gt, T.Gi, T.rho, T.th, T.actG, b.pairing
    phi, g = x
    gi = Gi[g]
    out = []
    for s in range(T.N):
        sgi = actG[s][gi]
        inner = Gt[Gt[gi][rho[phi[s]]]][actG[s][g]]
        out.append(At[th[sgi][Ai[phi[s]]]][th[Gt[sgi][g]][br[inner][gi]]])
    return Cochain0(tuple(out), gi)


def c1_mul(b: Braiding, x: Cochain1, y: Cochain1) -> Cochain1:
    """u¹²_{σ,τ} = u¹_{σ,τ} · ^{ψ¹_σ ^σψ¹_τ}u²_{σ,τ} · ^{ψ¹_σ}{^σψ¹_τ, ψ²_σ}; ψ¹² = ψ¹ψ²."""
    T = tables(b.base)
    N, At, Gt, th, actG, br = T.N, T.At, T.Gt, T.th, T.actG, b.pairing
    (u1, p1), (u2, p2) = x, y
    out = []
    for s in range(N):
        ps = p1[s]
        ths = th[ps]
        acts = actG[s]
        brow = p2[s]
        for t in range(N):
            spt = acts[p1[t]]
            k = s * N + t
            out.append(At[At[u1[k]][th[Gt[ps][spt]][u2[k]]]][ths[br[spt][brow]]])
    return Cochain1(tuple(out), tuple(Gt[a][c] for a, c in zip(p1, p2)))


def c1_inv(b: Braiding, x: Cochain1) -> Cochain1:
    """u'_{σ,τ} = ^{(ψ_σ ^σψ_τ)⁻¹}u_{σ,τ}⁻¹ · {^σψ_τ⁻¹, ψ_σ⁻¹}; ψ' = ψ⁻¹.

    On cochains with ρ(u_{σ,τ})ψ_σ ^σψ_τ = ψ_{στ} (in particular on Z¹) this
    agrees with :func:`c1_inv_displayed`; unlike that form it is a two-sided
    inverse on every 1-cochain.
    """
    T = tables(b.base)
    N, At, Ai, Gt, Gi, th, actG, br = T.N, T.At, T.Ai, T.Gt, T.Gi, T.th, T.actG, b.pairing
    u, psi = x
    out = []
    for s in range(N):
        for t in range(N):
            a = th[Gi[Gt[psi[s]][actG[s][psi[t]]]]][Ai[u[s * N + t]]]
            out.append(At[a][br[actG[s][Gi[psi[t]]]][Gi[psi[s]]]])
    return Cochain1(tuple(out), tuple(Gi[g] for g in psi))


def c1_inv_displayed(b: Braiding, x: Cochain1) -> Cochain1:
    """u'_{σ,τ} = ^{ψ_{στ}⁻¹}u_{σ,τ}⁻¹ · {^σψ_τ⁻¹, ψ_σ⁻¹}; ψ' = ψ⁻¹ (valid on Z¹)."""
    T = tables(b.base)
    N, Gam, At, Ai, Gi, th, actG, br = T.N, T.Gam, T.At, T.Ai, T.Gi, T.th, T.actG, b.pairing
    u, psi = x
    out = []
    for s in range(N):
        for t in range(N):
            a = th[Gi[psi[Gam[s][t]]]][Ai[u[s * N + t]]]
            out.append(At[a][br[actG[s][Gi[psi[t]]]][Gi[psi[s]]]])
    return Cochain1(tuple(out), tuple(Gi[g] for g in psi))


def diff_d(b: Braiding, c: Cochain0) -> Cochain1:
    """u_{σ,τ} = ^{g⁻¹}(φ_{στ} · ^σφ_τ⁻¹ · φ_σ⁻¹), ψ_σ = g⁻¹ρ(φ_σ)^σg."""
    T = tables(b.base)
    N, Gam, At, Ai, Gt, Gi, rho, th, actA, actG = (
        T.N, T.Gam, T.At, T.Ai, T.Gt, T.Gi, T.rho, T.th, T.actA, T.actG)
    phi, g = c
    gi = Gi[g]
    thgi = th[gi]
    u = []
    for s in range(N):
        for t in range(N):
            u.append(thgi[At[At[phi[Gam[s][t]]][Ai[actA[s][phi[t]]]]][Ai[phi[s]]]])
    psi = tuple(Gt[Gt[gi][rho[phi[s]]]][actG[s][g]] for s in range(N))
    return Cochain1(tuple(u), psi)


def act_z1(b: Braiding, z: Cochain1, c: Cochain0) -> Cochain0:
    """Left action of Z¹ on C⁰: φ'_σ = {ψ_σ,g}⁻¹ · ^{ψ_σ}φ_σ · {^σg,ψ_σ}⁻¹."""
    T = tables(b.base)
    At, Ai, th, actG, br = T.At, T.Ai, T.th, T.actG, b.pairing
    psi = z.psi
    phi, g = c
    out = []
    for s in range(T.N):
        p = psi[s]
        out.append(At[At[Ai[br[p][g]]][th[p][phi[s]]]][Ai[br[actG[s][g]][p]]])
    return Cochain0(tuple(out), g)


def br_z1(b: Braiding, z1: Cochain1, z2: Cochain1) -> Cochain0:
    """{(u¹,ψ¹),(u²,ψ²)} = ((σ ↦ {ψ¹_σ, ψ²_σ}), 1), a 0-cochain up to B⁰."""
    br = b.pairing
    return Cochain0(tuple(br[p][q] for p, q in zip(z1.psi, z2.psi)), b.base.G.identity)


def orbit_shift_cochain(b: Braiding, z: Cochain1, c: Cochain0) -> Cochain0:
    """(φ·δ(ψ,g), g) with δ(ψ,g)_σ = {^σg, ψ_σ}⁻¹, so that z*c = d(·)·z."""
    T = tables(b.base)
    At, Ai, actG, br = T.At, T.Ai, T.actG, b.pairing
    phi, g = c
    return Cochain0(
        tuple(At[phi[s]][Ai[br[actG[s][g]][z.psi[s]]]] for s in range(T.N)), g
    )


def b1_prime_transform(cm: CrossedModule, c: Cochain0) -> Cochain0:
    """Substitute φ_σ ↦ φ_σ⁻¹, translating between (φ, g) in the product
    ^{g₁}φ²·φ¹ and its variant written with inverted φ."""
    Ai = cm.A.inverses
    return Cochain0(tuple(Ai[a] for a in c.phi), c.g)


# ---------------------------------------------------------------------------
# The abelian group H¹


def c1_closure(b: Braiding, gens: Sequence[Cochain1], start: Cochain1) -> set[Cochain1]:
    """Subgroup generated by ``gens`` (closure under right multiplication)."""
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = c1_mul(b, x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


@dataclass
class AbelianH1:
    """H¹ with the group law inherited from Z¹; classes keep the canonical
    representatives of :func:`h1_pointed`."""

    pointed: H1Result
    mul_table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    image_size: int

    @property
    def classes(self):
        return self.pointed.classes

    @property
    def order(self) -> int:
        return len(self.mul_table)

    def mul(self, i: int, j: int) -> int:
        return self.mul_table[i][j]

    @property
    def is_abelian(self) -> bool:
        t = self.mul_table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(i))

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return abelian_invariants(self.mul_table, self.identity)

    @property
    def exponent(self) -> int:
        from math import lcm

        e = 1
        for d in self.invariant_factors:
            e = lcm(e, d)
        return e


def image_of_d(b: Braiding) -> set[Cochain1]:
    cm = b.base
    gens = [diff_d(b, c) for c in c0_generators(cm)]
    return c1_closure(b, gens, unit_cochain1(cm))


def h1_abelian(b: Braiding, budget: int | None = None, h1: H1Result | None = None) -> AbelianH1:
    cm = b.base
    h1 = h1 or h1_pointed(cm, budget)
    z1set = set(h1.z1)
    imd = image_of_d(b)
    stray = next((x for x in imd if x not in z1set), None)
    if stray is not None:
        raise NonNormalImage("d̄ leaves Z¹", stray)
    img_gens = [diff_d(b, c) for c in c0_generators(cm)]
    for z in h1.z1:
        zi = c1_inv(b, z)
        for x in img_gens:
            y = c1_mul(b, c1_mul(b, z, x), zi)
            if y not in imd:
                raise NonNormalImage("im d̄ is not normal in Z¹", (z, x))
    orbits = h1.orbits()
    for k, cls in enumerate(h1.classes):
        coset = {c1_mul(b, x, cls.representative) for x in imd}
        if coset != set(orbits[k]):
            raise NonNormalImage("coset of im d̄ differs from the C⁰-orbit", (k,))
    reps = [c.representative for c in h1.classes]
    n = len(reps)
    table = tuple(
        tuple(h1.class_of(c1_mul(b, reps[i], reps[j])) for j in range(n)) for i in range(n)
    )
    inverse = tuple(h1.class_of(c1_inv(b, r)) for r in reps)
    return AbelianH1(h1, table, h1.distinguished, inverse, len(imd))


def is_group_hom(f: Sequence[int], src: AbelianH1, tgt: AbelianH1) -> tuple[bool, tuple[int, int] | None]:
    """Whether a class map respects the tables; returns the first failing pair."""
    for i in range(src.order):
        for j in range(src.order):
            if f[src.mul_table[i][j]] != tgt.mul_table[f[i]][f[j]]:
                return False, (i, j)
    return True, None


# ---------------------------------------------------------------------------
# Property sweep over the braided structures


def _tuples(pool: Sequence, k: int, limit: int, rng: random.Random) -> Iterator[tuple]:
    """All k-tuples from ``pool`` when there are at most ``limit``, else ``limit`` random ones."""
    if len(pool) ** k <= limit:
        yield from product(pool, repeat=k)
    else:
        for _ in range(limit):
            yield tuple(rng.choice(pool) for _ in range(k))


def all_cochains0(cm: CrossedModule) -> Iterator[Cochain0]:
    N = cm.gamma.order
    for phi in product(cm.A.elements, repeat=N):
        for g in cm.G.elements:
            yield Cochain0(phi, g)


def random_cochain0(cm: CrossedModule, rng: random.Random) -> Cochain0:
    N = cm.gamma.order
    return Cochain0(tuple(rng.randrange(cm.A.order) for _ in range(N)), rng.randrange(cm.G.order))


def random_cochain1(cm: CrossedModule, rng: random.Random) -> Cochain1:
    N = cm.gamma.order
    return Cochain1(
        tuple(rng.randrange(cm.A.order) for _ in range(N * N)),
        tuple(rng.randrange(cm.G.order) for _ in range(N)),
    )


def validate_dbar_structures(
    b: Braiding,
    *,
    limit: int = 4000,
    seed: int = 0,
    h1: H1Result | None = None,
    budget: int | None = None,
) -> ValidationReport:
    """Check the C⁰/C¹ group laws, d, the crossed module d̄, and (for a
    symmetric base braiding) the braiding on d̄.

    Each axiom ranges over all tuples of its domain when that has at most
    ``limit`` members, and over ``limit`` seeded random tuples otherwise.
    """
    cm = b.base
    rng = random.Random(seed)
    rep = ValidationReport("braided structures on C⁰, C¹, Z¹")
    h1 = h1 or h1_pointed(cm, budget)
    z1 = h1.z1
    z1set = set(z1)
    e0, e1 = unit_cochain0(cm), unit_cochain1(cm)
    N = cm.gamma.order
    c0_size = cm.A.order**N * cm.G.order
    if c0_size <= limit:
        c0_pool = list(all_cochains0(cm))
    else:
        c0_pool = [random_cochain0(cm, rng) for _ in range(min(limit, 400))]
    c1_pool = [random_cochain1(cm, rng) for _ in range(min(limit, 200))] + list(z1[:200])
    mul0 = lambda x, y: c0_mul(b, x, y)  # noqa: E731
    mul1 = lambda x, y: c1_mul(b, x, y)  # noqa: E731

    # group laws
    for x in c0_pool:
        rep.check("C0 identity", mul0(x, e0) == x and mul0(e0, x) == x, x)
        xi = c0_inv(b, x)
        rep.check("C0 inverse", mul0(x, xi) == e0 and mul0(xi, x) == e0, x)
    for x, y, z in _tuples(c0_pool, 3, limit, rng):
        rep.check("C0 associativity", mul0(mul0(x, y), z) == mul0(x, mul0(y, z)), (x, y, z))
    for x in c1_pool:
        rep.check("C1 identity", mul1(x, e1) == x and mul1(e1, x) == x, x)
        xi = c1_inv(b, x)
        rep.check("C1 inverse", mul1(x, xi) == e1 and mul1(xi, x) == e1, x)
    for x, y, z in _tuples(c1_pool, 3, limit, rng):
        rep.check("C1 associativity", mul1(mul1(x, y), z) == mul1(x, mul1(y, z)), (x, y, z))

    # Z¹ is a subgroup
    for x, y in _tuples(z1, 2, limit, rng):
        rep.check("Z1 closed under product", mul1(x, y) in z1set, (x, y))
    for x in z1:
        rep.check("Z1 closed under inverse", c1_inv(b, x) in z1set, x)
        rep.check("displayed inverse on Z1", c1_inv_displayed(b, x) == c1_inv(b, x), x)

    # d and B⁰
    b0 = {coboundary0(cm, s) for s in cm.A.elements}
    for x in c0_pool:
        rep.check("d lands in Z1", diff_d(b, x) in z1set, x)
    for x, y in _tuples(c0_pool, 2, limit, rng):
        rep.check("d homomorphism", diff_d(b, mul0(x, y)) == mul1(diff_d(b, x), diff_d(b, y)), (x, y))
    for x in b0:
        rep.check("d vanishes on B0", diff_d(b, x) == e1, x)
    for x, y in _tuples(sorted(b0), 2, limit, rng):
        rep.check("B0 subgroup", mul0(x, c0_inv(b, y)) in b0, (x, y))
    for x, y in product(c0_pool[:200], sorted(b0)):
        rep.check("B0 normal", mul0(mul0(x, y), c0_inv(b, x)) in b0, (x, y))

    def same_mod_b0(x: Cochain0, y: Cochain0) -> bool:
        return mul0(c0_inv(b, y), x) in b0

    # the action of Z¹ on C⁰ and the crossed-module axioms of d̄
    for z in z1[:200]:
        for x in sorted(b0):
            rep.check("action preserves B0", act_z1(b, z, x) in b0, (z, x))
    for x in c0_pool:
        rep.check("action identity", act_z1(b, e1, x) == x, x)
    for z1_, z2_ in _tuples(z1, 2, limit, rng):
        x = rng.choice(c0_pool)
        lhs = act_z1(b, mul1(z1_, z2_), x)
        rhs = act_z1(b, z1_, act_z1(b, z2_, x))
        rep.check("action law", same_mod_b0(lhs, rhs), (z1_, z2_, x))
    for z, x, y in ((rng.choice(z1), p, q) for p, q in _tuples(c0_pool, 2, limit, rng)):
        lhs = act_z1(b, z, mul0(x, y))
        rhs = mul0(act_z1(b, z, x), act_z1(b, z, y))
        rep.check("action by automorphisms", same_mod_b0(lhs, rhs), (z, x, y))
    for x, y in _tuples(c0_pool, 2, limit, rng):
        lhs = act_z1(b, diff_d(b, x), y)
        rhs = mul0(mul0(x, y), c0_inv(b, x))
        rep.check("CM1", same_mod_b0(lhs, rhs), (x, y))
    for z, x in ((rng.choice(z1), p) for p in c0_pool):
        lhs = diff_d(b, act_z1(b, z, x))
        rhs = mul1(mul1(z, diff_d(b, x)), c1_inv(b, z))
        rep.check("CM2", lhs == rhs, (z, x))

    # the pairing on Z¹ is a braiding only when the base braiding is symmetric
    if is_symmetric_braiding(b):
        _check_z1_braiding(rep, b, z1, c0_pool, limit, rng, same_mod_b0)

    # z * c = d(φ·δ(ψ,g), g) · z
    for z, c in ((rng.choice(z1), x) for x in c0_pool):
        lhs = act_c0(cm, z, c)
        rhs = mul1(diff_d(b, orbit_shift_cochain(b, z, c)), z)
        rep.check("orbit = coset", lhs == rhs, (z, c))
    return rep


def _check_z1_braiding(rep, b, z1, c0_pool, limit, rng, same_mod_b0) -> None:
    """(Br1)–(Br5), (Sym), (Pic) for the pairing [{ψ¹,ψ²}, 1] on Z¹."""
    e0 = unit_cochain0(b.base)
    mul0 = lambda x, y: c0_mul(b, x, y)  # noqa: E731
    mul1 = lambda x, y: c1_mul(b, x, y)  # noqa: E731
    inv1 = {x: c1_inv(b, x) for x in z1}
    imd = image_of_d(b)
    br = lambda p, q: br_z1(b, p, q)  # noqa: E731
    for p, q in _tuples(z1, 2, limit, rng):
        comm = mul1(mul1(mul1(p, q), inv1[p]), inv1[q])
        rep.check("Br1", diff_d(b, br(p, q)) == comm, (p, q))
        rep.check("commutator in im d", comm in imd, (p, q))
        rep.check("Sym", same_mod_b0(mul0(br(p, q), br(q, p)), e0), (p, q))
    if _is_picard(b):
        for p in z1:
            rep.check("Pic", same_mod_b0(br(p, p), e0), p)
    for x, z in ((p, rng.choice(z1)) for p in c0_pool):
        xi = c0_inv(b, x)
        rep.check("Br2", same_mod_b0(br(diff_d(b, x), z), mul0(x, act_z1(b, z, xi))), (x, z))
        rep.check("Br3", same_mod_b0(br(z, diff_d(b, x)), mul0(act_z1(b, z, x), xi)), (z, x))
    for p, q, r in _tuples(z1, 3, limit, rng):
        lhs = br(p, mul1(q, r))
        rhs = mul0(br(p, q), act_z1(b, q, br(p, r)))
        rep.check("Br4", same_mod_b0(lhs, rhs), (p, q, r))
        lhs = br(mul1(p, q), r)
        rhs = mul0(act_z1(b, p, br(q, r)), br(p, r))
        rep.check("Br5", same_mod_b0(lhs, rhs), (p, q, r))


def is_symmetric_braiding(b: Braiding) -> bool:
    At, e = b.base.A.table, b.base.A.identity
    br = b.pairing
    return all(At[br[g][h]][br[h][g]] == e for g in b.base.G.elements for h in b.base.G.elements)


def _is_picard(b: Braiding) -> bool:
    e = b.base.A.identity
    return is_symmetric_braiding(b) and all(b.pairing[g][g] == e for g in b.base.G.elements)
