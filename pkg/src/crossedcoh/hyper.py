"""Hypercochains with values in a crossed module, and pointed H⁰ / H¹.

A 1-cochain is ``Cochain1(u, psi)`` where ``u`` is the Γ×Γ table flattened
row-major (``u[σ*N + τ]``) and ``psi`` is indexed by Γ.  Tuple comparison of
cochains is the canonical lexicographic order over (u, ψ).
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, NamedTuple, Sequence

from .config import resolve_budget
from .crossed import (
    CrossedModule,
    CrossedMorphism,
    ValidationReport,
    check_quasi_iso,
    kernel_coker_bijective,
    kernel_crossed_module,
    unit_crossed_module,
    unit_inclusion,
)
from .errors import BoundExceeded, ExactnessFailure, NotACocycle
from .groups import GammaGroup


class Cochain0(NamedTuple):
    phi: tuple[int, ...]
    g: int


class Cochain1(NamedTuple):
    u: tuple[int, ...]
    psi: tuple[int, ...]


class Verdict(NamedTuple):
    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


class _Tables:
    """Local copies of the tables the inner loops need."""

    def __init__(self, cm: CrossedModule) -> None:
        self.N = cm.gamma.order
        self.Gam = cm.gamma.table
        self.At = cm.A.table
        self.Ai = cm.A.inverses
        self.Gt = cm.G.table
        self.Gi = cm.G.inverses
        self.eA = cm.A.identity
        self.eG = cm.G.identity
        self.eGam = cm.gamma.identity
        self.actA = cm.gammaA.action
        self.actG = cm.gammaG.action
        self.rho = cm.rho
        self.th = cm.theta


_TABLE_CACHE: dict[int, tuple[CrossedModule, _Tables]] = {}


def tables(cm: CrossedModule) -> _Tables:
    hit = _TABLE_CACHE.get(id(cm))
    if hit is not None and hit[0] is cm:
        return hit[1]
    t = _Tables(cm)
    if len(_TABLE_CACHE) > 256:
        _TABLE_CACHE.clear()
    _TABLE_CACHE[id(cm)] = (cm, t)
    return t


def unit_cochain0(cm: CrossedModule) -> Cochain0:
    return Cochain0(tuple(cm.A.identity for _ in cm.gamma.elements), cm.G.identity)


def unit_cochain1(cm: CrossedModule) -> Cochain1:
    N = cm.gamma.order
    return Cochain1(tuple(cm.A.identity for _ in range(N * N)), tuple(cm.G.identity for _ in range(N)))


def is_cocycle1(cm: CrossedModule, c: Cochain1) -> Verdict:
    """Check both 1-cocycle identities; the witness names the failing indices."""
    T = tables(cm)
    N, Gam, At, Gt, rho, th, actA, actG = T.N, T.Gam, T.At, T.Gt, T.rho, T.th, T.actA, T.actG
    u, psi = c
    if len(u) != N * N or len(psi) != N:
        return Verdict(False, ("shape",))
    for s in range(N):
        for t in range(N):
            lhs = Gt[Gt[rho[u[s * N + t]]][psi[s]]][actG[s][psi[t]]]
            if lhs != psi[Gam[s][t]]:
                return Verdict(False, ("psi", s, t))
    for s in range(N):
        ths = th[psi[s]]
        acts = actA[s]
        for t in range(N):
            st = Gam[s][t]
            for v in range(N):
                lhs = At[u[s * N + Gam[t][v]]][ths[acts[u[t * N + v]]]]
                rhs = At[u[st * N + v]][u[s * N + t]]
                if lhs != rhs:
                    return Verdict(False, ("u", s, t, v))
    return Verdict(True)


def c0_mul_plain(cm: CrossedModule, x: Cochain0, y: Cochain0) -> Cochain0:
    """Non-braided C⁰ law: (φ¹,g₁)(φ²,g₂) = (σ ↦ ^{g₁}φ²_σ · φ¹_σ, g₁g₂)."""
    T = tables(cm)
    th1 = T.th[x.g]
    At = T.At
    return Cochain0(tuple(At[th1[b]][a] for a, b in zip(x.phi, y.phi)), T.Gt[x.g][y.g])


def act_c0(cm: CrossedModule, z: Cochain1, c: Cochain0) -> Cochain1:
    """Right action z * (φ, g) of a 0-cochain on a 1-cocycle."""
    T = tables(cm)
    N, Gam, At, Ai, Gt, Gi = T.N, T.Gam, T.At, T.Ai, T.Gt, T.Gi
    u, psi = z
    phi, g = c
    gi = Gi[g]
    thgi = T.th[gi]
    th, actA, actG, rho = T.th, T.actA, T.actG, T.rho
    new_u = []
    for s in range(N):
        ths = th[psi[s]]
        acts = actA[s]
        phis_inv = Ai[phi[s]]
        row = Gam[s]
        for t in range(N):
            inner = At[At[At[phi[row[t]]][u[s * N + t]]][Ai[ths[acts[phi[t]]]]]][phis_inv]
            new_u.append(thgi[inner])
    new_psi = tuple(Gt[Gt[Gt[gi][rho[phi[s]]]][psi[s]]][actG[s][g]] for s in range(N))
    return Cochain1(tuple(new_u), new_psi)


def coboundary0(cm: CrossedModule, s: int) -> Cochain0:
    """(φ^s, ρ(s)⁻¹) with φ^s_σ = s⁻¹ · ^σ s."""
    T = tables(cm)
    si = T.Ai[s]
    return Cochain0(tuple(T.At[si][T.actA[k][s]] for k in range(T.N)), T.Gi[T.rho[s]])


# ---------------------------------------------------------------------------
# Enumeration of Z¹


def z1_search_size(cm: CrossedModule) -> int:
    N = cm.gamma.order
    return cm.G.order**N * cm.A.order ** (N * N)


def _psi_candidates(cm: CrossedModule) -> list[tuple[int, ...]]:
    """All ψ with ψ_{στ}(ψ_σ ^σψ_τ)⁻¹ ∈ ρ(A) for every pair."""
    T = tables(cm)
    N, Gam, Gt, Gi, actG = T.N, T.Gam, T.Gt, T.Gi, T.actG
    image = cm.image
    checks: list[list[tuple[int, int]]] = [[] for _ in range(N)]
    for s in range(N):
        for t in range(N):
            checks[max(s, t, Gam[s][t])].append((s, t))
    G = list(cm.G.elements)
    out: list[tuple[int, ...]] = []
    psi = [0] * N

    def rec(k: int) -> None:
        if k == N:
            out.append(tuple(psi))
            return
        for g in G:
            psi[k] = g
            ok = True
            for s, t in checks[k]:
                if Gt[psi[Gam[s][t]]][Gi[Gt[psi[s]][actG[s][psi[t]]]]] not in image:
                    ok = False
                    break
            if ok:
                rec(k + 1)

    rec(0)
    return out


def _u_completions(cm: CrossedModule, psi: tuple[int, ...]) -> list[Cochain1]:
    T = tables(cm)
    N, Gam, At, Gt, Gi, th, actA, actG = T.N, T.Gam, T.At, T.Gt, T.Gi, T.th, T.actA, T.actG
    fibers = cm.fibers
    cand = []
    for s in range(N):
        for t in range(N):
            target = Gt[psi[Gam[s][t]]][Gi[Gt[psi[s]][actG[s][psi[t]]]]]
            cand.append(fibers[target])
    checks: list[list[tuple[int, int, int, int, int]]] = [[] for _ in range(N * N)]
    for s in range(N):
        for t in range(N):
            for v in range(N):
                cells = (s * N + Gam[t][v], t * N + v, Gam[s][t] * N + v, s * N + t)
                checks[max(cells)].append((s, *cells))
    thpsi = [th[psi[s]] for s in range(N)]
    u = [0] * (N * N)
    out: list[Cochain1] = []
    M = N * N

    def rec(k: int) -> None:
        if k == M:
            out.append(Cochain1(tuple(u), psi))
            return
        for a in cand[k]:
            u[k] = a
            ok = True
            for s, c1, c2, c3, c4 in checks[k]:
                if At[u[c1]][thpsi[s][actA[s][u[c2]]]] != At[u[c3]][u[c4]]:
                    ok = False
                    break
            if ok:
                rec(k + 1)

    rec(0)
    return out


def _completions_chunk(args):
    cm, chunk = args
    out = []
    for psi in chunk:
        out.extend(_u_completions(cm, psi))
    return out


def enumerate_z1(cm: CrossedModule, budget: int | None = None, workers: int = 1) -> list[Cochain1]:
    """All 1-cocycles in canonical order.

    ``workers > 1`` splits the ψ candidates across processes; the merged
    result is sorted, so it does not depend on the split.
    """
    budget = resolve_budget(budget)
    size = z1_search_size(cm)
    if size > budget:
        raise BoundExceeded("Z¹ enumeration", size, budget)
    psis = _psi_candidates(cm)
    if workers > 1 and len(psis) > 1:
        chunks = [psis[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_completions_chunk, [(cm, ch) for ch in chunks]))
        out = [z for part in parts for z in part]
    else:
        out = _completions_chunk((cm, psis))
    out.sort()
    return out


def c0_generators(cm: CrossedModule) -> list[Cochain0]:
    """Elementary cochains (a at one σ) and constant (1, g); they generate C⁰."""
    N = cm.gamma.order
    eA = cm.A.identity
    gens = []
    for s in range(N):
        for a in cm.A.generators:
            phi = [eA] * N
            phi[s] = a
            gens.append(Cochain0(tuple(phi), cm.G.identity))
    for g in cm.G.generators:
        gens.append(Cochain0(tuple([eA] * N), g))
    return gens


@dataclass(frozen=True)
class H1Class:
    representative: Cochain1
    orbit_size: int


@dataclass
class H1Result:
    """Orbit decomposition of Z¹ under the C⁰-action."""

    cm: CrossedModule
    z1: list[Cochain1]
    classes: list[H1Class]
    class_index: dict[Cochain1, int]
    distinguished: int

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, z: Cochain1) -> int:
        try:
            return self.class_index[z]
        except KeyError:
            ok = is_cocycle1(self.cm, z)
            raise NotACocycle("not a 1-cocycle", ok.witness) from None

    def orbits(self) -> list[list[Cochain1]]:
        out: list[list[Cochain1]] = [[] for _ in self.classes]
        for z in self.z1:
            out[self.class_index[z]].append(z)
        return out


def h1_pointed(cm: CrossedModule, budget: int | None = None, workers: int = 1) -> H1Result:
    z1 = enumerate_z1(cm, budget, workers)
    gens = c0_generators(cm)
    index: dict[Cochain1, int] = {}
    classes: list[H1Class] = []
    for z in z1:
        if z in index:
            continue
        k = len(classes)
        index[z] = k
        queue = deque([z])
        size = 1
        while queue:
            x = queue.popleft()
            for c in gens:
                y = act_c0(cm, x, c)
                if y not in index:
                    index[y] = k
                    size += 1
                    queue.append(y)
        classes.append(H1Class(z, size))
    if len(index) != len(z1):
        raise AssertionError("orbit closure left Z¹")
    return H1Result(cm, z1, classes, index, index[unit_cochain1(cm)])


def cr1(cm: CrossedModule, psi: Sequence[int], h1: H1Result | None = None) -> int:
    """Class index of (1, ψ) for a G-valued 1-cocycle ψ."""
    T = tables(cm)
    psi = tuple(int(x) for x in psi)
    N = T.N
    if len(psi) != N:
        raise NotACocycle("ψ needs one value per element of Γ", (len(psi),))
    for s in range(N):
        for t in range(N):
            if T.Gt[psi[s]][T.actG[s][psi[t]]] != psi[T.Gam[s][t]]:
                raise NotACocycle("ψ_{στ} != ψ_σ ^σψ_τ", (s, t))
    if h1 is None:
        h1 = h1_pointed(cm)
    return h1.class_of(Cochain1(tuple([cm.A.identity] * (N * N)), psi))


def map_cochain1(m: CrossedMorphism, z: Cochain1) -> Cochain1:
    return Cochain1(tuple(m.fA[a] for a in z.u), tuple(m.fG[g] for g in z.psi))


def h1_induced(
    m: CrossedMorphism, src: H1Result | None = None, tgt: H1Result | None = None
) -> tuple[int, ...]:
    """Class map H¹(source) → H¹(target), checked on every cocycle of each orbit."""
    src = src or h1_pointed(m.source)
    tgt = tgt or h1_pointed(m.target)
    image = [-1] * len(src.classes)
    for z in src.z1:
        k = src.class_index[z]
        j = tgt.class_of(map_cochain1(m, z))
        if image[k] == -1:
            image[k] = j
        elif image[k] != j:
            raise AssertionError(f"induced map not well defined on class {k}")
    return tuple(image)


def h1_bijective_under_quasi_iso(
    m: CrossedMorphism, src: H1Result | None = None, tgt: H1Result | None = None
) -> ValidationReport:
    rep = ValidationReport("quasi-isomorphism invariance")
    qi, detail = kernel_coker_bijective(m)
    rep.check("quasi-isomorphism", qi, detail)
    if qi:
        src = src or h1_pointed(m.source)
        tgt = tgt or h1_pointed(m.target)
        f = h1_induced(m, src, tgt)
        rep.check("H¹ injective", len(set(f)) == len(f), f)
        rep.check("H¹ surjective", set(f) == set(range(len(tgt.classes))), f)
    return rep


# ---------------------------------------------------------------------------
# H⁰ and the exact sequence


def _crossed_homs(ga: GammaGroup) -> list[tuple[int, ...]]:
    """Maps φ: Γ → A with φ_{στ} = φ_σ · ^σφ_τ."""
    gamma, A = ga.gamma, ga.group
    N, Gam, At, act = gamma.order, gamma.table, A.table, ga.action
    checks: list[list[tuple[int, int]]] = [[] for _ in range(N)]
    for s in range(N):
        for t in range(N):
            checks[max(s, t, Gam[s][t])].append((s, t))
    out = []
    phi = [0] * N

    def rec(k: int) -> None:
        if k == N:
            out.append(tuple(phi))
            return
        for a in A.elements:
            phi[k] = a
            if all(phi[Gam[s][t]] == At[phi[s]][act[s][phi[t]]] for s, t in checks[k]):
                rec(k + 1)

    rec(0)
    return out


@dataclass
class H0Result:
    cm: CrossedModule
    z0: list[Cochain0]
    b0: frozenset[Cochain0]
    class_index: dict[Cochain0, int]
    representatives: list[Cochain0]
    b0_normal: bool

    def __len__(self) -> int:
        return len(self.representatives)


def h0(cm: CrossedModule, budget: int | None = None) -> H0Result:
    """Z⁰ modulo B⁰ under the non-braided law; classes are left cosets x·B⁰."""
    budget = resolve_budget(budget)
    size = cm.A.order ** cm.gamma.order * cm.G.order
    if size > budget:
        raise BoundExceeded("Z⁰ enumeration", size, budget)
    T = tables(cm)
    z0 = []
    for phi in _crossed_homs(cm.gammaA):
        for g in cm.G.elements:
            if all(T.Gt[T.rho[phi[s]]][T.actG[s][g]] == g for s in range(T.N)):
                z0.append(Cochain0(phi, g))
    z0.sort()
    b0 = frozenset(coboundary0(cm, s) for s in cm.A.elements)
    index: dict[Cochain0, int] = {}
    reps = []
    for x in z0:
        if x in index:
            continue
        for b in b0:
            index[c0_mul_plain(cm, x, b)] = len(reps)
        reps.append(x)
    normal = all(
        index[c0_mul_plain(cm, b, x)] == index[x] for x in z0 for b in b0
    )
    return H0Result(cm, z0, b0, index, reps, normal)


@dataclass
class ExactnessReport:
    junctions: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)
    sizes: dict[str, int] = field(default_factory=dict)
    delta_convention: str = "phi"

    @property
    def ok(self) -> bool:
        return all(self.junctions.values())

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "delta_convention": self.delta_convention,
            "sizes": self.sizes,
            "junctions": self.junctions,
            "witnesses": {k: repr(v) for k, v in self.witnesses.items()},
        }


def check_exact_sequence(
    cm: CrossedModule,
    budget: int | None = None,
    delta_convention: str = "phi",
    strict: bool = True,
) -> ExactnessReport:
    """H⁰(A) → H⁰(G) → H⁰(A→G) → H¹(A) → H¹(G) → H¹(A→G), junction by junction.

    ``delta_convention`` is ``"phi"`` (δ[φ,g] = [σ ↦ φ_σ]) or ``"phi_inv"``.
    """
    T = tables(cm)
    A, G = cm.A, cm.G
    rep = ExactnessReport(delta_convention=delta_convention)
    a_fixed = cm.gammaA.fixed_points()
    g_fixed = cm.gammaG.fixed_points()
    hh0 = h0(cm, budget)
    cmA = unit_crossed_module(cm.gammaA)
    cmG = unit_crossed_module(cm.gammaG)
    h1A = h1_pointed(cmA, budget)
    h1G = h1_pointed(cmG, budget)
    h1C = h1_pointed(cm, budget)
    rep.sizes = {
        "H0(A)": len(a_fixed), "H0(G)": len(g_fixed), "H0(A->G)": len(hh0),
        "H1(A)": len(h1A), "H1(G)": len(h1G), "H1(A->G)": len(h1C),
    }
    N = T.N
    ones = (0,) * (N * N)

    def record(name: str, lhs: set, rhs: set) -> None:
        ok = lhs == rhs
        rep.junctions[name] = ok
        if not ok:
            rep.witnesses[name] = sorted(lhs ^ rhs)[0]

    # at H⁰(Γ,G): ρ(A^Γ) = ker cr⁰
    unit0 = hh0.class_index[unit_cochain0(cm)]
    cr0 = {g: hh0.class_index[Cochain0((A.identity,) * N, g)] for g in g_fixed}
    record("H0(G)", {cm.rho[a] for a in a_fixed}, {g for g, k in cr0.items() if k == unit0})

    # at H⁰(Γ,A→G): im cr⁰ = ker δ
    def delta(x: Cochain0) -> int:
        phi = x.phi if delta_convention == "phi" else tuple(T.Ai[a] for a in x.phi)
        return h1A.class_of(Cochain1(ones, phi))

    delta_cls = [-1] * len(hh0)
    for x in hh0.z0:
        k = hh0.class_index[x]
        d = delta(x)
        if delta_cls[k] == -1:
            delta_cls[k] = d
        elif delta_cls[k] != d:
            rep.junctions["delta well-defined"] = False
            rep.witnesses["delta well-defined"] = x
    rep.junctions.setdefault("delta well-defined", True)
    record("H0(A->G)", set(cr0.values()), {k for k, d in enumerate(delta_cls) if d == h1A.distinguished})

    # at H¹(Γ,A): im δ = ker ρ_*
    to_G = CrossedMorphism(cmA, cmG, (0,), cm.rho)
    rho_star = h1_induced(to_G, h1A, h1G)
    record("H1(A)", set(delta_cls), {k for k, j in enumerate(rho_star) if j == h1G.distinguished})

    # at H¹(Γ,G): im ρ_* = ker cr¹
    cr1_map = h1_induced(unit_inclusion(cm), h1G, h1C)
    record("H1(G)", set(rho_star), {k for k, j in enumerate(cr1_map) if j == h1C.distinguished})

    if strict and not rep.ok:
        name = next(k for k, v in rep.junctions.items() if not v)
        raise ExactnessFailure(name, rep.witnesses.get(name))
    return rep


def two_neutral_witness(cm: CrossedModule, z: Cochain1, budget: int | None = None) -> tuple[int, ...] | None:
    """Least w: Γ → A with w_{στ} · u_{σ,τ} · ^{ψ_σ σ}w_τ⁻¹ · w_σ⁻¹ = 1, if any."""
    budget = resolve_budget(budget)
    N = cm.gamma.order
    size = cm.A.order**N
    if size > budget:
        raise BoundExceeded("2-neutrality search", size, budget)
    T = tables(cm)
    Gam, At, Ai, th, actA = T.Gam, T.At, T.Ai, T.th, T.actA
    u, psi = z
    checks: list[list[tuple[int, int]]] = [[] for _ in range(N)]
    for s in range(N):
        for t in range(N):
            checks[max(s, t, Gam[s][t])].append((s, t))
    w = [0] * N
    eA = T.eA

    def rec(k: int) -> bool:
        if k == N:
            return True
        for a in cm.A.elements:
            w[k] = a
            ok = True
            for s, t in checks[k]:
                x = At[At[At[w[Gam[s][t]]][u[s * N + t]]][Ai[th[psi[s]][actA[s][w[t]]]]]][Ai[w[s]]]
                if x != eA:
                    ok = False
                    break
            if ok and rec(k + 1):
                return True
        return False

    return tuple(w) if rec(0) else None


__all__ = [
    "Cochain0", "Cochain1", "H0Result", "H1Class", "H1Result", "Verdict", "act_c0",
    "c0_mul_plain", "check_exact_sequence", "check_quasi_iso", "coboundary0", "cr1",
    "enumerate_z1", "h0", "h1_bijective_under_quasi_iso", "h1_induced", "h1_pointed",
    "is_cocycle1", "map_cochain1", "two_neutral_witness", "unit_cochain0", "unit_cochain1",
    "kernel_crossed_module",
]
