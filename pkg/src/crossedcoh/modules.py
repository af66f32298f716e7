"""Finitely generated abelian groups with a Γ-action, and their H⁰ / H¹.

Conventions: a module on p generators is ℤᵖ modulo the span of its relation
vectors (the rows of ``relations``).  Γ acts on column vectors,
``γ·x = action[γ] @ x``.  SNF coordinates of x are ``y = Vᵀx`` where
U·R·V = D; coordinate i is taken modulo d_i (d_i = 0 means free).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import prod
from typing import Callable, Iterator, Sequence

from .config import resolve_budget
from .errors import BoundExceeded, NotAnAction, NotExact, NotFixed
from .groups import FiniteGroup
from .lattice import (
    ColumnEchelon,
    congruence_kernel,
    matmul,
    matvec,
    snf_with_inverses,
    transpose,
)

Vec = tuple[int, ...]

DEFAULT_LINALG_BUDGET = 4096  # unknowns (generators × |Γ|) in one cocycle system


def _vec(v: Sequence[int]) -> Vec:
    return tuple(int(x) for x in v)


@dataclass(frozen=True, eq=False)
class FgAbelianGroup:
    generators: int
    relations: tuple[Vec, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FgAbelianGroup):
            return NotImplemented
        return self.generators == other.generators and self.relations == other.relations

    def __hash__(self) -> int:
        return hash((self.generators, self.relations))

    @cached_property
    def _snf(self):
        p = self.generators
        R = [list(r) for r in self.relations]
        if not R:
            R = [[0] * p]
        U, D, V, Ui, Vi = snf_with_inverses(R)
        diag = [D[i][i] if i < len(D) else 0 for i in range(p)]
        return U, D, V, Vi, diag

    @property
    def U(self):
        return self._snf[0]

    @property
    def D(self):
        return self._snf[1]

    @property
    def V(self):
        return self._snf[2]

    @property
    def diag(self) -> list[int]:
        """d_i for every SNF coordinate (0 = free)."""
        return self._snf[4]

    @cached_property
    def kept(self) -> tuple[int, ...]:
        """SNF coordinates that are not identically zero (d_i ≠ 1)."""
        return tuple(i for i, d in enumerate(self.diag) if d != 1)

    @cached_property
    def moduli(self) -> tuple[int, ...]:
        return tuple(self.diag[i] for i in self.kept)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diag if d > 1)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d == 0)

    @property
    def order(self) -> int | None:
        """Number of elements, or None when infinite."""
        if self.rank:
            return None
        return prod(self.invariant_factors)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    def coords(self, x: Sequence[int]) -> list[int]:
        """SNF coordinates y = Vᵀx (all p of them, unreduced)."""
        V = self.V
        p = self.generators
        return [sum(V[k][i] * x[k] for k in range(p) if x[k]) for i in range(p)]

    def normal_form(self, x: Sequence[int]) -> Vec:
        """Reduced kept coordinates; equal iff the elements are equal."""
        y = self.coords(x)
        return tuple(y[i] % d if d else y[i] for i, d in zip(self.kept, self.moduli))

    def from_normal_form(self, nf: Sequence[int]) -> Vec:
        y = [0] * self.generators
        for i, v in zip(self.kept, nf):
            y[i] = v
        Vi = self._snf[3]
        # x = (Vᵀ)⁻¹ y = (V⁻¹)ᵀ y
        p = self.generators
        return tuple(sum(Vi[i][k] * y[i] for i in range(p)) for k in range(p))

    def is_zero(self, x: Sequence[int]) -> bool:
        return not any(self.normal_form(x))

    def equal(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return self.normal_form(x) == self.normal_form(y)

    def elements(self) -> Iterator[Vec]:
        """Normal forms of all elements, in lexicographic order (finite only)."""
        if not self.is_finite:
            raise ValueError("infinite group")
        yield from product(*(range(d) for d in self.moduli))

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"


def fg_group(generators: int, relations: Sequence[Sequence[int]]) -> FgAbelianGroup:
    rels = tuple(_vec(r) for r in relations)
    if any(len(r) != generators for r in rels):
        raise ValueError("every relation needs one coefficient per generator")
    return FgAbelianGroup(generators, rels)


def _in_lattice(M: FgAbelianGroup, x: Sequence[int]) -> bool:
    return M.is_zero(x)


@dataclass(frozen=True, eq=False)
class GammaModule:
    module: FgAbelianGroup
    gamma: FiniteGroup
    action: tuple[tuple[Vec, ...], ...]

    def act(self, g: int, x: Sequence[int]) -> Vec:
        return _vec(matvec(self.action[g], x))

    @cached_property
    def snf_action(self) -> tuple[list[list[int]], ...]:
        """Action in kept SNF coordinates: y ↦ A'_γ y."""
        M = self.module
        p = M.generators
        Vt = transpose(M.V)
        Vti = transpose(M._snf[3])  # (Vᵀ)⁻¹ = (V⁻¹)ᵀ
        out = []
        for A in self.action:
            full = matmul(matmul(Vt, A), Vti)
            out.append([[full[i][j] for j in M.kept] for i in M.kept])
        return tuple(out)


def make_gamma_module(
    module: FgAbelianGroup, gamma: FiniteGroup, action: Sequence[Sequence[Sequence[int]]]
) -> GammaModule:
    p = module.generators
    mats = tuple(tuple(_vec(row) for row in A) for A in action)
    if len(mats) != gamma.order or any(len(A) != p or any(len(r) != p for r in A) for A in mats):
        raise NotAnAction("need one p×p matrix per element of Γ")
    for g, A in enumerate(mats):
        for rel in module.relations:
            if not _in_lattice(module, matvec(A, rel)):
                raise NotAnAction("action does not preserve the relation lattice", (g, rel))
    basis = [tuple(1 if i == j else 0 for i in range(p)) for j in range(p)]
    for e in basis:
        if not module.equal(matvec(mats[gamma.identity], e), e):
            raise NotAnAction("identity of Γ does not act trivially", (e,))
    for a in gamma.elements:
        for b in gamma.elements:
            ab = mats[gamma.table[a][b]]
            for e in basis:
                lhs = matvec(ab, e)
                rhs = matvec(mats[a], matvec(mats[b], e))
                if not module.equal(lhs, rhs):
                    raise NotAnAction("action(γ₁γ₂) != action(γ₁)∘action(γ₂)", (a, b, e))
    # invertibility on the quotient follows from the homomorphism property
    return GammaModule(module, gamma, mats)


@dataclass(frozen=True, eq=False)
class ModuleHom:
    source: GammaModule
    target: GammaModule
    matrix: tuple[Vec, ...]  # target generators × source generators

    def __call__(self, x: Sequence[int]) -> Vec:
        return _vec(matvec(self.matrix, x))


def make_module_hom(source: GammaModule, target: GammaModule, matrix: Sequence[Sequence[int]]) -> ModuleHom:
    mat = tuple(_vec(r) for r in matrix)
    p, q = source.module.generators, target.module.generators
    if len(mat) != q or any(len(r) != p for r in mat):
        raise ValueError("matrix must be (target generators) × (source generators)")
    if source.gamma != target.gamma:
        raise ValueError("source and target need the same Γ")
    for rel in source.module.relations:
        if not target.module.is_zero(matvec(mat, rel)):
            raise ValueError(f"relation {rel} does not map to zero")
    for g in source.gamma.elements:
        for j in range(p):
            e = [1 if i == j else 0 for i in range(p)]
            lhs = matvec(mat, matvec(source.action[g], e))
            rhs = matvec(target.action[g], matvec(mat, e))
            if not target.module.equal(lhs, rhs):
                raise ValueError(f"not Γ-equivariant at γ={g}, generator {j}")
    return ModuleHom(source, target, mat)


# ---------------------------------------------------------------------------
# Subquotients K / S of ℤⁿ with a lift back to the ambient objects


@dataclass
class Subquotient:
    """A finitely generated abelian group presented as K/S.

    ``basis`` spans K ⊂ ℤⁿ (in the working coordinates), ``group`` presents
    K/S on the basis coefficients, ``to_ambient`` turns a working vector into
    the user-facing object (an element or a cocycle) and ``to_working`` goes
    back.
    """

    basis: list[list[int]]
    echelon: ColumnEchelon
    group: FgAbelianGroup
    to_ambient: Callable[[list[int]], object]
    to_working: Callable[[object], list[int]]

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.group.invariant_factors

    @property
    def order(self) -> int | None:
        return self.group.order

    @property
    def rank(self) -> int:
        return self.group.rank

    def coefficients(self, obj: object) -> list[int]:
        w = self.to_working(obj)
        c = self.echelon.solve(w)
        if c is None:
            raise ValueError("element is not in the subgroup")
        return c

    def class_of(self, obj: object) -> Vec:
        return self.group.normal_form(self.coefficients(obj))

    def is_trivial_class(self, obj: object) -> bool:
        return not any(self.class_of(obj))

    def working_vector(self, coeffs: Sequence[int]) -> list[int]:
        n = len(self.basis[0]) if self.basis else 0
        out = [0] * n
        for c, b in zip(coeffs, self.basis):
            if c:
                for i, x in enumerate(b):
                    if x:
                        out[i] += c * x
        return out

    @property
    def generators(self) -> list[object]:
        """Ambient representatives of the invariant-factor generators, then free ones."""
        G = self.group
        out = []
        for pos, d in zip(G.kept, G.moduli):
            nf = [0] * len(G.kept)
            nf[G.kept.index(pos)] = 1
            out.append(self.to_ambient(self.working_vector(G.from_normal_form(nf))))
        return out

    def elements(self) -> Iterator[object]:
        G = self.group
        for nf in G.elements():
            yield self.to_ambient(self.working_vector(G.from_normal_form(nf)))


def subquotient(
    n: int,
    basis: list[list[int]],
    relations: list[list[int]],
    to_ambient: Callable[[list[int]], object],
    to_working: Callable[[object], list[int]],
) -> Subquotient:
    """K/S where K = span(basis) and S = span(relations) ⊆ K."""
    ech = ColumnEchelon(basis, n)
    rel_coeffs = []
    for s in relations:
        c = ech.solve(s)
        if c is None:
            raise AssertionError("relation vector outside the subgroup")
        if any(c):
            rel_coeffs.append(c)
    group = fg_group(len(basis), rel_coeffs)
    return Subquotient(basis, ech, group, to_ambient, to_working)


# ---------------------------------------------------------------------------
# Cohomology


Cocycle = tuple[Vec, ...]  # one module element per γ, in generator coordinates


def _working_layout(m: GammaModule):
    M = m.module
    k = len(M.kept)
    moduli = M.moduli
    return M, k, moduli


def _to_working_cocycle(m: GammaModule, c: Sequence[Sequence[int]]) -> list[int]:
    M = m.module
    out: list[int] = []
    for x in c:
        y = M.coords(x)
        out.extend(y[i] for i in M.kept)
    return out


def _to_ambient_cocycle(m: GammaModule, w: Sequence[int]) -> Cocycle:
    M = m.module
    k = len(M.kept)
    return tuple(M.from_normal_form(w[s * k:(s + 1) * k]) for s in range(m.gamma.order))


def _reduce_working(m: GammaModule, w: Sequence[int]) -> list[int]:
    moduli = m.module.moduli
    k = len(moduli)
    return [x % moduli[i % k] if moduli[i % k] else x for i, x in enumerate(w)]


def cocycle_equations(m: GammaModule) -> tuple[int, list[tuple[dict[int, int], int]]]:
    """c_{στ} − c_σ − σ·c_τ ≡ 0 for all pairs, one equation per coordinate."""
    M, k, moduli = _working_layout(m)
    N, Gam = m.gamma.order, m.gamma.table
    acts = m.snf_action
    eqs = []
    for s in range(N):
        A = acts[s]
        for t in range(N):
            st = Gam[s][t]
            for i in range(k):
                coeffs: dict[int, int] = {}
                coeffs[st * k + i] = coeffs.get(st * k + i, 0) + 1
                coeffs[s * k + i] = coeffs.get(s * k + i, 0) - 1
                for j in range(k):
                    if A[i][j]:
                        coeffs[t * k + j] = coeffs.get(t * k + j, 0) - A[i][j]
                eqs.append(({a: b for a, b in coeffs.items() if b}, moduli[i]))
    return N * k, eqs


def _check_budget(m: GammaModule, budget: int | None) -> None:
    limit = budget if budget is not None else DEFAULT_LINALG_BUDGET
    size = len(m.module.kept) * m.gamma.order
    if size > limit:
        raise BoundExceeded("module cocycle system", size, limit)


def mod_h1(m: GammaModule, budget: int | None = None) -> Subquotient:
    """H¹(Γ, M) = Z¹/B¹ from the full system of cocycle equations.

    Classes are normal forms over the invariant factors; ``generators`` are
    cocycles (one module element per γ) representing them.
    """
    _check_budget(m, budget)
    M, k, moduli = _working_layout(m)
    N = m.gamma.order
    n, eqs = cocycle_equations(m)
    K = congruence_kernel(n, eqs)
    acts = m.snf_action
    rels: list[list[int]] = []
    for j in range(k):
        # coboundary of the j-th coordinate vector: σ ↦ (σ − 1)e_j
        v = []
        for s in range(N):
            col = [acts[s][i][j] - (1 if i == j else 0) for i in range(k)]
            v.extend(col)
        rels.append(_reduce_working(m, v))
    for s in range(N):
        for i, d in enumerate(moduli):
            if d:
                v = [0] * n
                v[s * k + i] = d
                rels.append(v)
    return subquotient(
        n, K, rels,
        lambda w: _to_ambient_cocycle(m, w),
        lambda c: _to_working_cocycle(m, c),
    )


def mod_h0(m: GammaModule, budget: int | None = None) -> Subquotient:
    """M^Γ as the kernel of the stacked (σ − 1), elements given in generator coordinates."""
    _check_budget(m, budget)
    M, k, moduli = _working_layout(m)
    acts = m.snf_action
    eqs = []
    for A in acts:
        for i in range(k):
            coeffs = {j: A[i][j] - (1 if i == j else 0) for j in range(k)}
            eqs.append(({a: b for a, b in coeffs.items() if b}, moduli[i]))
    K = congruence_kernel(k, eqs)
    rels = []
    for i, d in enumerate(moduli):
        if d:
            v = [0] * k
            v[i] = d
            rels.append(v)
    return subquotient(
        k, K, rels,
        lambda w: M.from_normal_form(w),
        lambda x: [M.coords(x)[i] for i in M.kept],
    )


def is_cocycle(m: GammaModule, c: Sequence[Sequence[int]]) -> bool:
    M = m.module
    N, Gam = m.gamma.order, m.gamma.table
    for s in range(N):
        for t in range(N):
            lhs = c[Gam[s][t]]
            rhs = [a + b for a, b in zip(c[s], m.act(s, c[t]))]
            if not M.equal(lhs, rhs):
                return False
    return True


def cocycle_from_generators(m: GammaModule, values: dict[int, Sequence[int]]) -> Cocycle:
    """Extend values on generators of Γ to a cochain via c_{σg} = c_σ + σ·c_g.

    The result is a cocycle exactly when the values satisfy the relations of
    Γ; callers check with :func:`is_cocycle`.
    """
    p = m.module.generators
    Gam = m.gamma.table
    e = m.gamma.identity
    c: dict[int, Vec] = {e: tuple([0] * p)}
    queue = deque([e])
    while queue:
        s = queue.popleft()
        for g, v in values.items():
            sg = Gam[s][g]
            if sg not in c:
                c[sg] = tuple(a + b for a, b in zip(c[s], m.act(s, v)))
                queue.append(sg)
    if len(c) != m.gamma.order:
        raise ValueError("values do not cover a generating set of Γ")
    return tuple(c[s] for s in m.gamma.elements)


def map_cocycle(f: ModuleHom, c: Sequence[Sequence[int]]) -> Cocycle:
    return tuple(f(x) for x in c)


def h1_kernel(f: ModuleHom, budget: int | None = None) -> Subquotient:
    """Kernel of H¹(Γ, source) → H¹(Γ, target), with cocycle generators."""
    hs = mod_h1(f.source, budget)
    ht = mod_h1(f.target, budget)
    if not ht.group.is_finite:
        raise ValueError("target H¹ should be finite")
    moduli = ht.group.moduli
    r = len(hs.basis)
    # image of each basis cocycle as a class vector in the target
    cols = [ht.class_of(map_cocycle(f, hs.to_ambient(b))) for b in hs.basis]
    eqs = []
    for i, d in enumerate(moduli):
        eqs.append(({j: cols[j][i] for j in range(r) if cols[j][i]}, d))
    K = congruence_kernel(r, eqs)
    rels = [list(row) for row in hs.group.relations]

    def to_ambient(w: list[int]):
        return hs.to_ambient(hs.working_vector(w))

    return subquotient(r, K, rels, to_ambient, hs.coefficients)


def h1_image_order(f: ModuleHom, budget: int | None = None) -> int:
    """Order of the image of H¹(source) in H¹(target)."""
    hs = mod_h1(f.source, budget)
    ht = mod_h1(f.target, budget)
    imgs = {ht.class_of(map_cocycle(f, g)) for g in hs.generators}
    zero = tuple(0 for _ in ht.group.moduli)
    seen = {zero}
    queue = deque([zero])
    moduli = ht.group.moduli
    while queue:
        x = queue.popleft()
        for g in imgs:
            y = tuple((a + b) % d for a, b, d in zip(x, g, moduli))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen)


# ---------------------------------------------------------------------------
# Short exact sequences and the connecting map


def restrict(m: GammaModule, elems: Sequence[int]) -> tuple[GammaModule, tuple[int, ...]]:
    """Restriction to the subgroup with the given elements (sorted ambient order)."""
    from .groups import subgroup

    H, incl = subgroup(m.gamma, elems)
    return GammaModule(m.module, H, tuple(m.action[g] for g in incl)), incl


@dataclass
class ShortExactSequence:
    A: GammaModule
    B: GammaModule
    C: GammaModule
    i: ModuleHom
    p: ModuleHom


def check_exact(ses: ShortExactSequence) -> None:
    """Injectivity, im = ker, surjectivity; raises NotExact with a witness."""
    A, B, C = ses.A.module, ses.B.module, ses.C.module
    for M in (A, B, C):
        if not M.is_finite:
            raise NotExact("only finite modules are supported")
    imgA = {B.normal_form(ses.i(A.from_normal_form(x))) for x in A.elements()}
    if len(imgA) != A.order:
        raise NotExact("A → B is not injective")
    kerP = {x for x in B.elements() if C.is_zero(ses.p(B.from_normal_form(x)))}
    if kerP != imgA:
        raise NotExact("image of A differs from the kernel of B → C", sorted(kerP ^ imgA)[0])
    imgB = {C.normal_form(ses.p(B.from_normal_form(x))) for x in B.elements()}
    if len(imgB) != C.order:
        raise NotExact("B → C is not surjective")


def lift(ses: ShortExactSequence, c: Sequence[int], strategy: str = "least") -> Vec:
    """A preimage of c in B: least or greatest normal form."""
    B, C = ses.B.module, ses.C.module
    target = C.normal_form(c)
    hits = [x for x in B.elements() if C.normal_form(ses.p(B.from_normal_form(x))) == target]
    if not hits:
        raise NotExact("element has no preimage", tuple(c))
    chosen = hits[0] if strategy == "least" else hits[-1]
    return B.from_normal_form(chosen)


def connecting_delta0(
    ses: ShortExactSequence,
    c: Sequence[int],
    subgroup_elems: Sequence[int] | None = None,
    strategy: str = "least",
) -> tuple[Vec, Subquotient, Cocycle]:
    """δ(c) ∈ H¹(Γ′, A) for c ∈ C^{Γ′}: lift to b, take σ ↦ σb − b, pull back to A.

    Returns (class normal form, H¹(Γ′, A), the A-valued cocycle).
    """
    check_exact(ses)
    elems = list(subgroup_elems) if subgroup_elems is not None else list(ses.A.gamma.elements)
    Ar, incl = restrict(ses.A, elems)
    Br, _ = restrict(ses.B, elems)
    Cr, _ = restrict(ses.C, elems)
    Cm = ses.C.module
    for k, g in enumerate(incl):
        if not Cm.equal(Cr.act(k, c), c):
            raise NotFixed("element is not fixed by the subgroup", (g,))
    b = lift(ses, c, strategy)
    Bm, Am = ses.B.module, ses.A.module
    # preimage table of i: B-normal form → A element
    back = {Bm.normal_form(ses.i(Am.from_normal_form(x))): Am.from_normal_form(x) for x in Am.elements()}
    cocycle = []
    for k in range(len(incl)):
        diff = tuple(x - y for x, y in zip(Br.act(k, b), b))
        nf = Bm.normal_form(diff)
        if nf not in back:
            raise NotExact("σb − b is not in the image of A", (incl[k],))
        cocycle.append(back[nf])
    h1 = mod_h1(Ar)
    return h1.class_of(tuple(cocycle)), h1, tuple(cocycle)


# ---------------------------------------------------------------------------
# The worked examples


def unitary_gamma() -> tuple[FiniteGroup, int, int]:
    """Γ = ⟨φ⟩ × ⟨τ⟩ with φ⁸ = τ⁴ = 1; returns (Γ, φ, τ)."""
    from .groups import cyclic_group, direct_product

    G = direct_product(cyclic_group(8), cyclic_group(4))
    phi, tau = 1 * 4 + 0, 0 * 4 + 1
    return G, phi, tau


def _sign_action(gamma: FiniteGroup, phi: int, p: int) -> list[list[list[int]]]:
    """φ ↦ −1, τ ↦ 1: element (a, b) acts as (−1)^a."""
    mats = []
    for g in gamma.elements:
        a = g // 4
        sign = -1 if a % 2 else 1
        mats.append([[sign if i == j else 0 for j in range(p)] for i in range(p)])
    return mats


def build_unitary_example(n: int) -> tuple[GammaModule, GammaModule, ModuleHom]:
    """X = ℤ^{2n,even}/d(4ℤ), X^sc = ℤ^{2n}/d(ℤ), and the map induced by inclusion.

    X uses the basis b₁ = 2e₁, b_i = e_i − e₁ (i ≥ 2) of the even sublattice,
    in which d(1) = n·b₁ + Σ_{i≥2} b_i.
    """
    if n < 1:
        raise ValueError("n must be positive")
    m = 2 * n
    gamma, phi, _ = unitary_gamma()
    d1 = [n] + [1] * (m - 1)
    X = fg_group(m, [[4 * x for x in d1]])
    Xsc = fg_group(m, [[1] * m])
    mx = make_gamma_module(X, gamma, _sign_action(gamma, phi, m))
    msc = make_gamma_module(Xsc, gamma, _sign_action(gamma, phi, m))
    incl = [[0] * m for _ in range(m)]
    incl[0][0] = 2
    for i in range(1, m):
        incl[0][i] = -1
        incl[i][i] = 1
    return mx, msc, make_module_hom(mx, msc, incl)


def unitary_x_element(n: int, v: Sequence[int]) -> Vec:
    """Coordinates in the b-basis of a vector v ∈ ℤ^{2n} with even coordinate sum."""
    if sum(v) % 2:
        raise ValueError("vector is not in the even sublattice")
    rest = list(v[1:])
    first = (v[0] + sum(rest)) // 2
    return tuple([first] + rest)


def two_torsion_plus_quotient(X: FgAbelianGroup) -> tuple[int, ...]:
    """Invariant factors of X/2X ⊕ X[2]."""
    parts = []
    for d in X.diag:
        if d == 0:
            parts.append(2)  # ℤ/2ℤ contributes to X/2X only
        elif d % 2 == 0:
            parts.extend([2, 2])
    return tuple(sorted(parts))


def build_zmod8_sequence() -> ShortExactSequence:
    """0 → ⟨4x⟩ → ℤ/8 → ℤ/4 → 0 with Γ = {1, τ, σ, στ}, σ = ×5, τ = ×(−1)."""
    from .fixtures import klein_gamma

    gamma = klein_gamma()
    sigma, tau = gamma.index_of("sigma"), gamma.index_of("tau")
    units = {g: 1 for g in gamma.elements}
    units[sigma] = 5
    units[tau] = -1
    units[gamma.table[sigma][tau]] = -5
    A = make_gamma_module(fg_group(1, [[2]]), gamma, [[[1]] for _ in gamma.elements])
    B = make_gamma_module(fg_group(1, [[8]]), gamma, [[[units[g]]] for g in gamma.elements])
    C = make_gamma_module(fg_group(1, [[4]]), gamma, [[[units[g]]] for g in gamma.elements])
    i = make_module_hom(A, B, [[4]])
    p = make_module_hom(B, C, [[1]])
    ses = ShortExactSequence(A, B, C, i, p)
    check_exact(ses)
    return ses
