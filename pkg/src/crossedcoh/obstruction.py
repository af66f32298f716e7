"""Band-valued nonabelian 2-cocycles, neutrality, and the coboundary Δ(u, ψ)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, NamedTuple, Sequence

from .config import resolve_budget
from .crossed import CrossedModule, ValidationReport, unit_crossed_module
from .errors import BoundExceeded, NotACocycle
from .groups import FiniteGroup, OutData, compute_out
from .hyper import (
    Cochain1,
    H1Result,
    Verdict,
    enumerate_z1,
    h1_pointed,
    is_cocycle1,
    tables,
    two_neutral_witness,
)


@lru_cache(maxsize=64)
def out_data(group: FiniteGroup) -> OutData:
    return compute_out(group)


@dataclass(frozen=True)
class Band:
    gamma: FiniteGroup
    group: FiniteGroup
    out: OutData
    beta: tuple[int, ...]

    def is_homomorphism(self) -> Verdict:
        out, Gam = self.out, self.gamma.table
        for s in self.gamma.elements:
            for t in self.gamma.elements:
                rs = out.out_classes[self.beta[s]][0]
                rt = out.out_classes[self.beta[t]][0]
                if out.class_of[out.compose(rs, rt)] != self.beta[Gam[s][t]]:
                    return Verdict(False, (s, t))
        return Verdict(True)

    def representatives(self) -> tuple[tuple[int, ...], ...]:
        """Canonical Aut representative of β(σ) for each σ."""
        return tuple(self.out.representative(k) for k in self.beta)

    def describe(self) -> list[list[int]]:
        return [list(p) for p in self.representatives()]


class TwoCocycle(NamedTuple):
    """``u`` flattened row-major over Γ×Γ, ``f[σ]`` an index into Aut(A)."""

    u: tuple[int, ...]
    f: tuple[int, ...]


def is_cocycle2(band: Band, c: TwoCocycle) -> Verdict:
    A, out = band.group, band.out
    N, Gam = band.gamma.order, band.gamma.table
    At, Ai = A.table, A.inverses
    auts = out.automorphisms
    u, f = c
    if len(u) != N * N or len(f) != N:
        return Verdict(False, ("shape",))
    for s in range(N):
        fs = auts[f[s]]
        for t in range(N):
            ft, fst = auts[f[t]], auts[f[Gam[s][t]]]
            a = u[s * N + t]
            ai = Ai[a]
            if any(At[At[a][fs[ft[x]]]][ai] != fst[x] for x in A.elements):
                return Verdict(False, ("inn(u)∘f∘f = f", s, t))
    for s in range(N):
        fs = auts[f[s]]
        for t in range(N):
            st = Gam[s][t]
            for v in range(N):
                lhs = At[u[s * N + Gam[t][v]]][fs[u[t * N + v]]]
                if lhs != At[u[st * N + v]][u[s * N + t]]:
                    return Verdict(False, ("u identity", s, t, v))
    for s in range(N):
        if out.class_of[f[s]] != band.beta[s]:
            return Verdict(False, ("band", s))
    return Verdict(True)


def act_w(band: Band, w: Sequence[int], c: TwoCocycle) -> TwoCocycle:
    """u'_{σ,τ} = w_{στ} · u_{σ,τ} · f_σ(w_τ)⁻¹ · w_σ⁻¹ and f'_σ = inn(w_σ) ∘ f_σ."""
    A, out = band.group, band.out
    N, Gam = band.gamma.order, band.gamma.table
    At, Ai = A.table, A.inverses
    auts = out.automorphisms
    u, f = c
    new_u = []
    for s in range(N):
        fs = auts[f[s]]
        for t in range(N):
            new_u.append(At[At[At[w[Gam[s][t]]][u[s * N + t]]][Ai[fs[w[t]]]]][Ai[w[s]]])
    new_f = tuple(out.compose(out.inner_of(w[s]), f[s]) for s in range(N))
    return TwoCocycle(tuple(new_u), new_f)


class Neutrality(NamedTuple):
    neutral: bool
    witness: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.neutral


def is_neutral_class(band: Band, c: TwoCocycle, budget: int | None = None) -> Neutrality:
    """Search w in lexicographic order; the first hit is the least witness."""
    budget = resolve_budget(budget)
    A = band.group
    N, Gam = band.gamma.order, band.gamma.table
    size = A.order**N
    if size > budget:
        raise BoundExceeded("neutrality search", size, budget)
    At, Ai, e = A.table, A.inverses, A.identity
    auts = band.out.automorphisms
    u, f = c
    fperm = [auts[k] for k in f]
    checks: list[list[tuple[int, int]]] = [[] for _ in range(N)]
    for s in range(N):
        for t in range(N):
            checks[max(s, t, Gam[s][t])].append((s, t))
    w = [0] * N

    def rec(k: int) -> bool:
        if k == N:
            return True
        for a in A.elements:
            w[k] = a
            if all(
                At[At[At[w[Gam[s][t]]][u[s * N + t]]][Ai[fperm[s][w[t]]]]][Ai[w[s]]] == e
                for s, t in checks[k]
            ) and rec(k + 1):
                return True
        return False

    if rec(0):
        return Neutrality(True, tuple(w))
    return Neutrality(False, None)


def delta_coboundary(cm: CrossedModule, c: Cochain1) -> tuple[Band, TwoCocycle]:
    """Δ(u, ψ) = (u, f) with f_σ = θ_{ψ_σ} ∘ (σ-action) and band f mod Inn."""
    ok = is_cocycle1(cm, c)
    if not ok:
        raise NotACocycle("Δ needs a 1-cocycle", ok.witness)
    T = tables(cm)
    out = out_data(cm.A)
    f = []
    for s in range(T.N):
        th = T.th[c.psi[s]]
        act = T.actA[s]
        f.append(out.index[tuple(th[act[x]] for x in cm.A.elements)])
    beta = tuple(out.class_of[k] for k in f)
    return Band(cm.gamma, cm.A, out, beta), TwoCocycle(c.u, tuple(f))


@dataclass
class KangRow:
    class_index: int
    representative: Cochain1
    in_image: bool
    delta_neutral: bool
    neutral_witness: tuple[int, ...] | None
    two_neutral: bool

    @property
    def consistent(self) -> bool:
        return self.in_image == self.delta_neutral == self.two_neutral

    def to_dict(self) -> dict:
        return {
            "class": self.class_index,
            "in_image_of_cr1": self.in_image,
            "delta_neutral": self.delta_neutral,
            "two_neutral": self.two_neutral,
            "witness": list(self.neutral_witness) if self.neutral_witness else None,
        }


@dataclass
class KangReport:
    rows: list[KangRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.consistent for r in self.rows)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "classes": [r.to_dict() for r in self.rows]}


def cr1_image(cm: CrossedModule, h1: H1Result, budget: int | None = None) -> set[int]:
    """Classes hit by (1, ψ) for some G-valued 1-cocycle ψ."""
    N = cm.gamma.order
    ones = tuple([cm.A.identity] * (N * N))
    return {
        h1.class_of(Cochain1(ones, z.psi))
        for z in enumerate_z1(unit_crossed_module(cm.gammaG), budget)
    }


def kang_criterion(cm: CrossedModule, budget: int | None = None, h1: H1Result | None = None) -> KangReport:
    """For every class: in im(cr¹) ⇔ Δ(representative) neutral ⇔ 2-neutral."""
    h1 = h1 or h1_pointed(cm, budget)
    image = cr1_image(cm, h1, budget)
    rep = KangReport()
    for k, cls in enumerate(h1.classes):
        z = cls.representative
        band, c2 = delta_coboundary(cm, z)
        neut = is_neutral_class(band, c2, budget)
        two = two_neutral_witness(cm, z, budget) is not None
        rep.rows.append(KangRow(k, z, k in image, neut.neutral, neut.witness, two))
    return rep


def delta_transport(cm: CrossedModule, h1: H1Result, limit: int = 2000) -> ValidationReport:
    """How Δ moves along the C⁰-action, on cocycles z and generators c.

    For c = (φ, 1): Δ(z*c) = act_w(φ, Δ(z)) with the same band.
    For c = (1, g): Δ(z*c) = (θ_{g⁻¹}∘u, θ_{g⁻¹}∘f∘θ_g), a conjugate band.
    Neutrality of Δ(z) is the same for z and z*c in both cases.
    """
    from .hyper import act_c0, c0_generators

    rep = ValidationReport("Δ along the C⁰-action")
    out = out_data(cm.A)
    theta_idx = [out.index[tuple(p)] for p in cm.theta]
    Ginv = cm.G.inverses
    gens = c0_generators(cm)
    eG = cm.G.identity
    zs = h1.z1[:limit]
    neutral_cache: dict[TwoCocycle, bool] = {}

    def neutral(band: Band, c: TwoCocycle) -> bool:
        if c not in neutral_cache:
            neutral_cache[c] = is_neutral_class(band, c).neutral
        return neutral_cache[c]

    for z in zs:
        band, c = delta_coboundary(cm, z)
        for x in gens:
            band2, c2 = delta_coboundary(cm, act_c0(cm, z, x))
            if x.g == eG:
                rep.check("(φ,1): Δ moves by act_w", c2 == act_w(band, x.phi, c), (z, x))
                rep.check("(φ,1): same band", band2.beta == band.beta, (z, x))
            else:
                ti, t = theta_idx[Ginv[x.g]], theta_idx[x.g]
                u = tuple(cm.theta[Ginv[x.g]][a] for a in c.u)
                f = tuple(out.compose(ti, out.compose(k, t)) for k in c.f)
                rep.check("(1,g): Δ conjugated by θ_g", c2 == TwoCocycle(u, f), (z, x))
            rep.check("neutrality preserved", neutral(band, c) == neutral(band2, c2), (z, x))
    return rep


def neutrality_orbit_report(
    cm: CrossedModule, h1: H1Result, samples: int = 32, seed: int = 0
) -> ValidationReport:
    """act_w keeps 2-cocycles cocycles and never changes neutrality."""
    import random
    from itertools import product

    rng = random.Random(seed)
    rep = ValidationReport("neutrality on act_w-orbits")
    N, A = cm.gamma.order, cm.A
    if A.order**N <= samples:
        ws = list(product(A.elements, repeat=N))
    else:
        ws = [tuple(rng.randrange(A.order) for _ in range(N)) for _ in range(samples)]
    for cls in h1.classes:
        band, c = delta_coboundary(cm, cls.representative)
        base = is_neutral_class(band, c).neutral
        for w in ws:
            c2 = act_w(band, w, c)
            rep.check("act_w output is a 2-cocycle", is_cocycle2(band, c2).ok, (cls.representative, w))
            rep.check("neutrality constant on orbit", is_neutral_class(band, c2).neutral == base, (cls.representative, w))
    return rep
