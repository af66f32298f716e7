"""Finite groups as multiplication tables, Γ-actions, automorphisms and Out."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import gcd
from typing import Iterable, Sequence

from .config import DEFAULT_AUT_BOUND
from .errors import BoundExceeded, NotAGroup, NotAHomomorphism, NotAnAction

Perm = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group on the indices ``0..order-1``.

    Build instances with :func:`make_group`, which validates the table and
    fills in the inverse list.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]
    names: tuple[str, ...] | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def prod(self, *xs: int) -> int:
        r = self.identity
        t = self.table
        for x in xs:
            r = t[r][x]
        return r

    def conj(self, g: int, x: int) -> int:
        """g x g⁻¹"""
        t = self.table
        return t[t[g][x]][self.inverses[g]]

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a b a⁻¹ b⁻¹"""
        t, i = self.table, self.inverses
        return t[t[t[a][b]][i[a]]][i[b]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverses[a], -k
        r = self.identity
        for _ in range(k):
            r = self.table[r][a]
        return r

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def index_of(self, label: str | int) -> int:
        if isinstance(label, int):
            if not 0 <= label < self.order:
                raise KeyError(label)
            return label
        if self.names and label in self.names:
            return self.names.index(label)
        if label.isdigit() and int(label) < self.order:
            return int(label)
        raise KeyError(label)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for a in self.elements:
            k, x = 1, a
            while x != self.identity:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in range(a))

    @cached_property
    def center(self) -> frozenset[int]:
        t = self.table
        return frozenset(
            z for z in self.elements if all(t[z][x] == t[x][z] for x in self.elements)
        )

    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by ``gens`` (closure under right multiplication)."""
        gens = list(gens)
        seen = {self.identity}
        queue = deque([self.identity])
        t = self.table
        while queue:
            x = queue.popleft()
            for g in gens:
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by decreasing element order."""
        cand = sorted(self.elements, key=lambda a: (-self.element_orders[a], a))
        gens: list[int] = []
        span = frozenset([self.identity])
        for a in cand:
            if len(span) == self.order:
                break
            if a not in span:
                gens.append(a)
                span = self.generated(gens)
        return tuple(gens)

    def is_normal(self, sub: Iterable[int]) -> bool:
        sub = frozenset(sub)
        return all(self.conj(g, h) in sub for g in self.generators for h in sub)


def make_group(
    table: Sequence[Sequence[int]], names: Sequence[str] | None = None
) -> FiniteGroup:
    """Validate a multiplication table and return the group it defines."""
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    rows = tuple(tuple(int(x) for x in row) for row in table)
    for a, row in enumerate(rows):
        if len(row) != n:
            raise NotAGroup("table is not square", (a,))
        for x in row:
            if not 0 <= x < n:
                raise NotAGroup("entry out of range", (a, x))
    if names is not None:
        names = tuple(str(s) for s in names)
        if len(names) != n or len(set(names)) != n:
            raise NotAGroup("names must be distinct, one per element")
    full = tuple(range(n))
    ident = next((e for e in range(n) if rows[e] == full), None)
    if ident is None or any(rows[a][ident] != a for a in range(n)):
        raise NotAGroup("no two-sided identity", (ident,))
    for a in range(n):
        if len(set(rows[a])) != n:
            raise NotAGroup("row is not a permutation", (a,))
        if len({rows[b][a] for b in range(n)}) != n:
            raise NotAGroup("column is not a permutation", (a,))
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab = rows[ra[b]]
            rb = rows[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise NotAGroup("associativity fails", (a, b, c))
    inverses = []
    for a in range(n):
        b = rows[a].index(ident)
        if rows[b][a] != ident:
            raise NotAGroup("no two-sided inverse", (a,))
        inverses.append(b)
    return FiniteGroup(n, rows, ident, tuple(inverses), names)


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x]

    def kernel(self) -> frozenset[int]:
        e = self.target.identity
        return frozenset(x for x in self.source.elements if self.image[x] == e)

    def image_set(self) -> frozenset[int]:
        return frozenset(self.image)

    def compose(self, first: "GroupHom") -> "GroupHom":
        """``self ∘ first``"""
        return GroupHom(first.source, self.target, tuple(self.image[x] for x in first.image))


def make_hom(source: FiniteGroup, target: FiniteGroup, image: Sequence[int]) -> GroupHom:
    image = tuple(int(x) for x in image)
    if len(image) != source.order or any(not 0 <= y < target.order for y in image):
        raise NotAHomomorphism("image table has wrong length or entries")
    st, tt = source.table, target.table
    for a in source.elements:
        for b in source.elements:
            if image[st[a][b]] != tt[image[a]][image[b]]:
                raise NotAHomomorphism("image(xy) != image(x)image(y)", (a, b))
    return GroupHom(source, target, image)


def identity_hom(group: FiniteGroup) -> GroupHom:
    return GroupHom(group, group, tuple(group.elements))


@dataclass(frozen=True)
class GammaGroup:
    """``group`` with Γ acting on the left: ``action[γ][x] = ^γ x``."""

    gamma: FiniteGroup
    group: FiniteGroup
    action: tuple[Perm, ...]

    def act(self, gamma_elt: int, x: int) -> int:
        return self.action[gamma_elt][x]

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(
            x for x in self.group.elements if all(p[x] == x for p in self.action)
        )


def _check_automorphism(group: FiniteGroup, perm: Perm) -> tuple | None:
    """Return a failing pair, or None when ``perm`` is an automorphism."""
    if sorted(perm) != list(group.elements):
        return ("not a bijection",)
    t = group.table
    for a in group.elements:
        pa = perm[a]
        ta = t[a]
        tpa = t[pa]
        for b in group.elements:
            if perm[ta[b]] != tpa[perm[b]]:
                return (a, b)
    return None


def make_gamma_group(
    gamma: FiniteGroup, group: FiniteGroup, action: Sequence[Sequence[int]]
) -> GammaGroup:
    action = tuple(tuple(int(x) for x in p) for p in action)
    if len(action) != gamma.order:
        raise NotAnAction("need one permutation per element of Γ")
    for g, perm in enumerate(action):
        if len(perm) != group.order:
            raise NotAnAction("permutation has wrong length", (g,))
        bad = _check_automorphism(group, perm)
        if bad is not None:
            raise NotAnAction("per-γ map is not an automorphism", (g, *bad))
    if action[gamma.identity] != tuple(group.elements):
        raise NotAnAction("identity of Γ does not act trivially", (gamma.identity,))
    for a in gamma.elements:
        for b in gamma.elements:
            pab = action[gamma.table[a][b]]
            pa, pb = action[a], action[b]
            for x in group.elements:
                if pab[x] != pa[pb[x]]:
                    raise NotAnAction("action(γ₁γ₂) != action(γ₁)∘action(γ₂)", (a, b, x))
    return GammaGroup(gamma, group, action)


def trivial_action(gamma: FiniteGroup, group: FiniteGroup) -> GammaGroup:
    ident = tuple(group.elements)
    return GammaGroup(gamma, group, tuple(ident for _ in gamma.elements))


# ---------------------------------------------------------------------------
# Homomorphism search


def _extend_from_generators(
    source: FiniteGroup, target: FiniteGroup, gens: Sequence[int], images: Sequence[int]
) -> tuple[int, ...] | None:
    """Extend generator images along the Cayley graph; None on inconsistency."""
    f = [-1] * source.order
    f[source.identity] = target.identity
    queue = deque([source.identity])
    st, tt = source.table, target.table
    while queue:
        x = queue.popleft()
        fx = f[x]
        for g, h in zip(gens, images):
            y = st[x][g]
            fy = tt[fx][h]
            if f[y] == -1:
                f[y] = fy
                queue.append(y)
            elif f[y] != fy:
                return None
    if -1 in f:
        return None
    return tuple(f)


def homomorphisms(
    source: FiniteGroup, target: FiniteGroup, *, bijective: bool = False
) -> list[tuple[int, ...]]:
    """All homomorphisms ``source → target`` as image tuples, sorted."""
    gens = source.generators
    so, to = source.element_orders, target.element_orders
    cands = []
    for g in gens:
        if bijective:
            cands.append([h for h in target.elements if to[h] == so[g]])
        else:
            cands.append([h for h in target.elements if so[g] % to[h] == 0])
    out = []
    for images in product(*cands):
        f = _extend_from_generators(source, target, gens, images)
        if f is None:
            continue
        if bijective and len(set(f)) != target.order:
            continue
        out.append(f)
    out.sort()
    return out


@dataclass(frozen=True)
class OutData:
    """Aut(group) as sorted permutation tuples, with the Inn-coset partition.

    ``out_classes[k]`` lists the automorphism indices of the k-th coset; the
    cosets are ordered by their least member, which is also the canonical
    representative.
    """

    group: FiniteGroup
    automorphisms: tuple[Perm, ...]
    inner: frozenset[int]
    out_classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @cached_property
    def index(self) -> dict[Perm, int]:
        return {p: i for i, p in enumerate(self.automorphisms)}

    def representative(self, k: int) -> Perm:
        return self.automorphisms[self.out_classes[k][0]]

    def inner_of(self, a: int) -> int:
        """Index of the inner automorphism x ↦ a x a⁻¹."""
        g = self.group
        return self.index[tuple(g.conj(a, x) for x in g.elements)]

    def compose(self, i: int, j: int) -> int:
        """Index of automorphism i ∘ j."""
        p, q = self.automorphisms[i], self.automorphisms[j]
        return self.index[tuple(p[x] for x in q)]

    @property
    def homs(self) -> list[GroupHom]:
        return [GroupHom(self.group, self.group, p) for p in self.automorphisms]


def compute_out(group: FiniteGroup, bound: int = DEFAULT_AUT_BOUND) -> OutData:
    if group.order > bound:
        raise BoundExceeded("compute_out", group.order, bound)
    auts = tuple(homomorphisms(group, group, bijective=True))
    index = {p: i for i, p in enumerate(auts)}
    inner = frozenset(
        index[tuple(group.conj(a, x) for x in group.elements)] for a in group.elements
    )
    class_of = [-1] * len(auts)
    classes: list[tuple[int, ...]] = []
    for i, p in enumerate(auts):
        if class_of[i] != -1:
            continue
        members = sorted(index[tuple(p[auts[j][x]] for x in group.elements)] for j in inner)
        for m in members:
            class_of[m] = len(classes)
        classes.append(tuple(members))
    return OutData(group, auts, inner, tuple(classes), tuple(class_of))


# ---------------------------------------------------------------------------
# Builders


def group_from_function(elements: Sequence, mul, names: Sequence[str] | None = None) -> FiniteGroup:
    """Tabulate a group from an element list and a binary operation."""
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return make_group(table, names)


def cyclic_group(n: int) -> FiniteGroup:
    return make_group([[(a + b) % n for b in range(n)] for a in range(n)])


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Elements ordered as ``a * |h| + b`` for (a, b)."""
    m = h.order
    table = [
        [g.table[a1][a2] * m + h.table[b1][b2] for a2 in g.elements for b2 in h.elements]
        for a1 in g.elements
        for b1 in h.elements
    ]
    names = None
    if g.names or h.names:
        names = [f"({g.name(a)},{h.name(b)})" for a in g.elements for b in h.elements]
    return make_group(table, names)


def permutation_group(gens: Sequence[Sequence[int]]) -> FiniteGroup:
    """Closure of permutation generators; elements ordered by BFS discovery."""
    gens = [tuple(p) for p in gens]
    degree = len(gens[0]) if gens else 1
    ident = tuple(range(degree))
    elems = [ident]
    seen = {ident}
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in gens:
            y = tuple(x[g[k]] for k in range(degree))
            if y not in seen:
                seen.add(y)
                elems.append(y)
        i += 1
    return group_from_function(elems, lambda p, q: tuple(p[q[k]] for k in range(degree)))


def quotient_group(group: FiniteGroup, normal: Iterable[int]) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Return (G/N, projection) with cosets ordered by least member."""
    normal = frozenset(normal)
    proj = [-1] * group.order
    reps: list[int] = []
    for x in group.elements:
        if proj[x] != -1:
            continue
        for n in normal:
            proj[group.table[x][n]] = len(reps)
        reps.append(x)
    table = [[proj[group.table[a][b]] for b in reps] for a in reps]
    return make_group(table), tuple(proj)


def subgroup(group: FiniteGroup, elems: Iterable[int]) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Return (H, inclusion) with H's elements in increasing ambient order."""
    elems = sorted(set(elems))
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[group.table[a][b]] for b in elems] for a in elems]
    names = [group.names[x] for x in elems] if group.names else None
    return make_group(table, names), tuple(elems)


def units_mod(m: int) -> tuple[FiniteGroup, tuple[int, ...]]:
    """(ℤ/m)^× as a group, together with the residue of each element."""
    res = tuple(a for a in range(1, m + 1) if gcd(a % m, m) == 1) if m > 1 else (0,)
    res = tuple(a % m for a in res)
    return group_from_function(res, lambda a, b: (a * b) % max(m, 1)), res


def quaternion_group() -> FiniteGroup:
    """Q₈ with elements ordered 1, -1, i, -i, j, -j, k, -k."""
    # unit quaternions as (sign, axis), axis 0 = real
    basis = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
             (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
             (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
             (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
             (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}
    elems = [(s, ax) for ax in range(4) for s in (1, -1)]

    def mul(x, y):
        s, ax = basis[(x[1], y[1])]
        return (x[0] * y[0] * s, ax)

    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return group_from_function(elems, mul, names)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n: rotations r^k then reflections s r^k."""
    elems = [(f, k) for f in (0, 1) for k in range(n)]

    def mul(x, y):
        f1, k1 = x
        f2, k2 = y
        return ((f1 + f2) % 2, ((-k1 if f2 else k1) + k2) % n)

    return group_from_function(elems, mul)


def symmetric_group(n: int) -> FiniteGroup:
    from itertools import permutations

    elems = list(permutations(range(n)))
    return group_from_function(elems, lambda p, q: tuple(p[q[k]] for k in range(n)))


def _prime_factors(n: int) -> list[int]:
    ps, p = [], 2
    while p * p <= n:
        if n % p == 0:
            ps.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        ps.append(n)
    return ps


def abelian_invariants(table: Sequence[Sequence[int]], identity: int) -> tuple[int, ...]:
    """Invariant factors d₁ | d₂ | … of a finite abelian group given by its table.

    For each prime p, the number of cyclic p-factors of order ≥ p^k is
    log_p(|G[p^k]| / |G[p^(k-1)]|), where G[m] is the m-torsion.
    """
    n = len(table)

    def pow_(x: int, k: int) -> int:
        r = identity
        for _ in range(k):
            r = table[r][x]
        return r

    factors: list[int] = []
    for p in _prime_factors(n):
        counts = [1]
        k = 1
        while counts[-1] < n and n % p**k == 0:
            m = p**k
            counts.append(sum(1 for x in range(n) if pow_(x, m) == identity))
            if counts[-1] == counts[-2]:
                break
            k += 1
        # number of factors with exponent ≥ k
        ge = []
        for k in range(1, len(counts)):
            ratio, e = counts[k] // counts[k - 1], 0
            while ratio > 1:
                ratio //= p
                e += 1
            ge.append(e)
        exps = []
        for k, cnt in enumerate(ge, start=1):
            nxt = ge[k] if k < len(ge) else 0
            exps.extend([k] * (cnt - nxt))
        factors.append(sorted(exps, reverse=True))
    width = max((len(f) for f in factors), default=0)
    inv = [1] * width
    primes = _prime_factors(n)
    for p, exps in zip(primes, factors):
        for i, e in enumerate(exps):
            inv[width - 1 - i] *= p**e
    return tuple(d for d in inv if d > 1)
