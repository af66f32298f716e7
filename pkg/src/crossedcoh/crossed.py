"""Crossed modules, braidings and morphisms, with exhaustive axiom checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Sequence

from .errors import KernelNotCentral, NotSurjective
from .groups import FiniteGroup, GammaGroup, GroupHom, Perm


@dataclass
class AxiomResult:
    name: str
    passed: bool = True
    checked: int = 0
    failures: int = 0
    witness: Any = None

    def record(self, ok: bool, witness: Any) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.passed:
                self.passed = False
                self.witness = witness

    def to_dict(self) -> dict:
        d = {"axiom": self.name, "passed": self.passed, "checked": self.checked}
        if not self.passed:
            d["failures"] = self.failures
            d["witness"] = list(self.witness) if isinstance(self.witness, tuple) else self.witness
        return d


@dataclass
class ValidationReport:
    """Per-axiom outcomes; every axiom is scanned completely."""

    subject: str
    results: dict[str, AxiomResult] = field(default_factory=dict)

    def axiom(self, name: str) -> AxiomResult:
        if name not in self.results:
            self.results[name] = AxiomResult(name)
        return self.results[name]

    def check(self, name: str, ok: bool, witness: Any = None) -> None:
        self.axiom(name).record(bool(ok), witness)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results.values())

    def __bool__(self) -> bool:
        return self.ok

    def failed(self) -> list[str]:
        return [n for n, r in self.results.items() if not r.passed]

    def merge(self, other: "ValidationReport", prefix: str = "") -> None:
        for name, r in other.results.items():
            self.results[prefix + name] = r

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "axioms": [r.to_dict() for r in self.results.values()],
        }


@dataclass(frozen=True)
class CrossedModule:
    """ρ: A → G with G acting on A through ``theta[g]`` (``^g s = theta[g][s]``)."""

    gammaA: GammaGroup
    gammaG: GammaGroup
    rho: tuple[int, ...]
    theta: tuple[Perm, ...]

    @property
    def gamma(self) -> FiniteGroup:
        return self.gammaA.gamma

    @property
    def A(self) -> FiniteGroup:
        return self.gammaA.group

    @property
    def G(self) -> FiniteGroup:
        return self.gammaG.group

    @property
    def rho_hom(self) -> GroupHom:
        return GroupHom(self.A, self.G, self.rho)

    @cached_property
    def image(self) -> frozenset[int]:
        return frozenset(self.rho)

    @cached_property
    def kernel(self) -> frozenset[int]:
        e = self.G.identity
        return frozenset(s for s in self.A.elements if self.rho[s] == e)

    @cached_property
    def fibers(self) -> tuple[tuple[int, ...], ...]:
        """``fibers[g]`` = ρ⁻¹(g) in increasing order."""
        out: list[list[int]] = [[] for _ in self.G.elements]
        for s in self.A.elements:
            out[self.rho[s]].append(s)
        return tuple(tuple(f) for f in out)

    @cached_property
    def coker_classes(self) -> tuple[int, ...]:
        """Index of the ρ(A)-coset of each g ∈ G, cosets ordered by least member."""
        cls = [-1] * self.G.order
        k = 0
        for g in self.G.elements:
            if cls[g] == -1:
                for a in self.image:
                    cls[self.G.table[g][a]] = k
                k += 1
        return tuple(cls)


def validate_crossed_module(cm: CrossedModule) -> ValidationReport:
    rep = ValidationReport("crossed module")
    A, G = cm.A, cm.G
    At, Gt, Ai, Gi = A.table, G.table, A.inverses, G.inverses
    gA, gG = cm.gammaA.action, cm.gammaG.action
    rho, theta = cm.rho, cm.theta
    rep.check("same Γ", cm.gammaA.gamma == cm.gammaG.gamma, None)
    shape_ok = len(rho) == A.order and len(theta) == G.order and all(
        len(p) == A.order and sorted(p) == list(A.elements) for p in theta
    )
    rep.check("well-formed", shape_ok, None)
    if not shape_ok:
        return rep
    for a in A.elements:
        for b in A.elements:
            rep.check("ρ homomorphism", rho[At[a][b]] == Gt[rho[a]][rho[b]], (a, b))
    for sg in cm.gamma.elements:
        for s in A.elements:
            rep.check("ρ Γ-equivariant", rho[gA[sg][s]] == gG[sg][rho[s]], (sg, s))
    for g in G.elements:
        th = theta[g]
        for a in A.elements:
            for b in A.elements:
                rep.check("θ by automorphisms", th[At[a][b]] == At[th[a]][th[b]], (g, a, b))
    rep.check("θ identity", theta[G.identity] == tuple(A.elements), (G.identity,))
    for g in G.elements:
        for h in G.elements:
            tgh, tg, th = theta[Gt[g][h]], theta[g], theta[h]
            for s in A.elements:
                rep.check("θ action law", tgh[s] == tg[th[s]], (g, h, s))
    for sg in cm.gamma.elements:
        for g in G.elements:
            for s in A.elements:
                lhs = gA[sg][theta[g][s]]
                rhs = theta[gG[sg][g]][gA[sg][s]]
                rep.check("θ Γ-equivariant", lhs == rhs, (sg, g, s))
    for s in A.elements:
        for s2 in A.elements:
            rep.check("CM1", theta[rho[s]][s2] == At[At[s][s2]][Ai[s]], (s, s2))
    for g in G.elements:
        for s2 in A.elements:
            rep.check("CM2", rho[theta[g][s2]] == Gt[Gt[g][rho[s2]]][Gi[g]], (g, s2))
    return rep


@dataclass(frozen=True)
class Braiding:
    """Pairing ``pairing[g][g']`` = {g, g'} ∈ A."""

    base: CrossedModule
    pairing: tuple[tuple[int, ...], ...]

    def __call__(self, g: int, h: int) -> int:
        return self.pairing[g][h]


def trivial_braiding(cm: CrossedModule) -> Braiding:
    e = cm.A.identity
    return Braiding(cm, tuple(tuple(e for _ in cm.G.elements) for _ in cm.G.elements))


BRAIDING_MODES = ("braided", "symmetric", "picard")


def validate_braiding(b: Braiding, mode: str = "braided") -> ValidationReport:
    if mode not in BRAIDING_MODES:
        raise ValueError(f"mode must be one of {BRAIDING_MODES}")
    cm = b.base
    A, G = cm.A, cm.G
    At, Ai, Gt = A.table, A.inverses, G.table
    rho, th, br = cm.rho, cm.theta, b.pairing
    gA, gG = cm.gammaA.action, cm.gammaG.action
    rep = ValidationReport(f"braiding ({mode})")
    Gs = list(G.elements)
    for sg in cm.gamma.elements:
        for g in Gs:
            for h in Gs:
                rep.check("Γ-equivariance", gA[sg][br[g][h]] == br[gG[sg][g]][gG[sg][h]], (sg, g, h))
    for g in Gs:
        for h in Gs:
            rep.check("Br1", rho[br[g][h]] == G.commutator(g, h), (g, h))
    for s in A.elements:
        rs = rho[s]
        for g in Gs:
            # {ρ(s), g} = s · ^g(s)⁻¹ and {g, ρ(s)} = ^g s · s⁻¹
            rep.check("Br2", br[rs][g] == At[s][Ai[th[g][s]]], (s, g))
            rep.check("Br3", br[g][rs] == At[th[g][s]][Ai[s]], (g, s))
    for g1 in Gs:
        for g2 in Gs:
            for g3 in Gs:
                lhs = br[g1][Gt[g2][g3]]
                rhs = At[br[g1][g2]][th[g2][br[g1][g3]]]
                rep.check("Br4", lhs == rhs, (g1, g2, g3))
                lhs = br[Gt[g1][g2]][g3]
                rhs = At[th[g1][br[g2][g3]]][br[g1][g3]]
                rep.check("Br5", lhs == rhs, (g1, g2, g3))
    if mode in ("symmetric", "picard"):
        for g in Gs:
            for h in Gs:
                rep.check("Sym", At[br[g][h]][br[h][g]] == A.identity, (g, h))
    if mode == "picard":
        for g in Gs:
            rep.check("Pic", br[g][g] == A.identity, (g,))
    return rep


def derived_identities(b: Braiding) -> ValidationReport:
    """Consequences of the braiding axioms, checked independently."""
    cm = b.base
    A, G = cm.A, cm.G
    At, Ai, Gt, Gi = A.table, A.inverses, G.table, G.inverses
    rho, th, br = cm.rho, cm.theta, b.pairing
    rep = ValidationReport("derived identities")
    Gs = list(G.elements)
    for s in A.elements:
        rs = rho[s]
        for g in Gs:
            for h in Gs:
                # ^g s · {g,h} = {g, ρ(s)h} · s
                rep.check("left s-shift", At[th[g][s]][br[g][h]] == At[br[g][Gt[rs][h]]][s], (g, h, s))
                # s · {h,g} = {ρ(s)h, g} · ^g s
                rep.check("right s-shift", At[s][br[h][g]] == At[br[Gt[rs][h]][g]][th[g][s]], (g, h, s))
                # {g,h} · ^{hg} s = ^{gh} s · {g,h}
                lhs = At[br[g][h]][th[Gt[h][g]][s]]
                rhs = At[th[Gt[g][h]][s]][br[g][h]]
                rep.check("commutes with ^{gh}s", lhs == rhs, (g, h, s))
    e = G.identity
    for g in Gs:
        rep.check("unit", br[e][g] == A.identity and br[g][e] == A.identity, (g,))
    for g in Gs:
        for h in Gs:
            rep.check("inverse symmetry", br[g][h] == th[Gt[h][g]][br[Gi[g]][Gi[h]]], (g, h))
    return rep


def commutator_braiding(cm: CrossedModule, lift: str = "least") -> Braiding:
    """{g, g'} = [s, s'] for lifts s, s' of g, g' through ρ.

    ``lift`` selects the least or greatest preimage; the result does not
    depend on it when the kernel of ρ is central.
    """
    A = cm.A
    missing = [g for g in cm.G.elements if not cm.fibers[g]]
    if missing:
        raise NotSurjective("ρ is not surjective", (missing[0],))
    At = A.table
    for k in sorted(cm.kernel):
        for a in A.elements:
            if At[k][a] != At[a][k]:
                raise KernelNotCentral("ker ρ is not central", (k, a))
    pick = 0 if lift == "least" else -1
    lifts = [cm.fibers[g][pick] for g in cm.G.elements]
    pairing = tuple(
        tuple(A.commutator(lifts[g], lifts[h]) for h in cm.G.elements) for g in cm.G.elements
    )
    return Braiding(cm, pairing)


@dataclass(frozen=True)
class CrossedMorphism:
    source: CrossedModule
    target: CrossedModule
    fA: tuple[int, ...]
    fG: tuple[int, ...]

    def compose(self, first: "CrossedMorphism") -> "CrossedMorphism":
        """``self ∘ first``"""
        return CrossedMorphism(
            first.source,
            self.target,
            tuple(self.fA[x] for x in first.fA),
            tuple(self.fG[x] for x in first.fG),
        )


def identity_morphism(cm: CrossedModule) -> CrossedMorphism:
    return CrossedMorphism(cm, cm, tuple(cm.A.elements), tuple(cm.G.elements))


def validate_morphism(m: CrossedMorphism) -> ValidationReport:
    s, t = m.source, m.target
    rep = ValidationReport("crossed-module morphism")
    rep.check("same Γ", s.gamma == t.gamma, None)
    fA, fG = m.fA, m.fG
    for a in s.A.elements:
        for b in s.A.elements:
            rep.check("fA homomorphism", fA[s.A.table[a][b]] == t.A.table[fA[a]][fA[b]], (a, b))
    for g in s.G.elements:
        for h in s.G.elements:
            rep.check("fG homomorphism", fG[s.G.table[g][h]] == t.G.table[fG[g]][fG[h]], (g, h))
    for a in s.A.elements:
        rep.check("ρ₂∘fA = fG∘ρ₁", t.rho[fA[a]] == fG[s.rho[a]], (a,))
    for sg in s.gamma.elements:
        for a in s.A.elements:
            rep.check("fA Γ-equivariant", fA[s.gammaA.action[sg][a]] == t.gammaA.action[sg][fA[a]], (sg, a))
        for g in s.G.elements:
            rep.check("fG Γ-equivariant", fG[s.gammaG.action[sg][g]] == t.gammaG.action[sg][fG[g]], (sg, g))
    for g in s.G.elements:
        for a in s.A.elements:
            rep.check("fA(^g s) = ^{fG(g)} fA(s)", fA[s.theta[g][a]] == t.theta[fG[g]][fA[a]], (g, a))
    return rep


def braiding_preserved(
    m: CrossedMorphism, b1: Braiding, b2: Braiding
) -> tuple[bool, tuple[int, int] | None]:
    """Whether fA({g,g'}₁) = {fG(g), fG(g')}₂; returns the first failing pair."""
    for g in m.source.G.elements:
        for h in m.source.G.elements:
            if m.fA[b1.pairing[g][h]] != b2.pairing[m.fG[g]][m.fG[h]]:
                return False, (g, h)
    return True, None


def kernel_coker_bijective(m: CrossedMorphism) -> tuple[bool, dict]:
    """Whether m induces bijections ker ρ₁ → ker ρ₂ and coker ρ₁ → coker ρ₂."""
    s, t = m.source, m.target
    kmap = {a: m.fA[a] for a in s.kernel}
    ker_ok = len(set(kmap.values())) == len(s.kernel) and set(kmap.values()) == set(t.kernel)
    cs, ct = s.coker_classes, t.coker_classes
    cmap: dict[int, set[int]] = {}
    for g in s.G.elements:
        cmap.setdefault(cs[g], set()).add(ct[m.fG[g]])
    images = [next(iter(v)) for v in cmap.values()]
    coker_ok = (
        all(len(v) == 1 for v in cmap.values())
        and len(set(images)) == len(images)
        and set(images) == set(ct)
    )
    return ker_ok and coker_ok, {"kernel_bijective": ker_ok, "cokernel_bijective": coker_ok}


def check_quasi_iso(m: CrossedMorphism) -> bool:
    return kernel_coker_bijective(m)[0]


def _trivial_gamma_group(gamma: FiniteGroup) -> GammaGroup:
    from .groups import make_group

    one = make_group([[0]])
    return GammaGroup(gamma, one, tuple((0,) for _ in gamma.elements))


def unit_crossed_module(gg: GammaGroup) -> CrossedModule:
    """The crossed module 1 → G; its H¹ is the nonabelian H¹(Γ, G)."""
    ga = _trivial_gamma_group(gg.gamma)
    return CrossedModule(ga, gg, (gg.group.identity,), tuple((0,) for _ in gg.group.elements))


def kernel_crossed_module(ga: GammaGroup) -> CrossedModule:
    """The crossed module A → 1 (A must be abelian for CM1)."""
    gg = _trivial_gamma_group(ga.gamma)
    return CrossedModule(ga, gg, tuple(0 for _ in ga.group.elements), (tuple(ga.group.elements),))


def unit_inclusion(cm: CrossedModule) -> CrossedMorphism:
    """(1 → G) → (A → G); on H¹ this induces the crossing map cr¹."""
    return CrossedMorphism(unit_crossed_module(cm.gammaG), cm, (cm.A.identity,), tuple(cm.G.elements))
