"""Exact integer linear algebra: Smith normal form, congruence kernels,
column echelon solving.  Matrices are lists of rows of Python ints."""

from __future__ import annotations

from math import gcd
from typing import Sequence

Matrix = list[list[int]]
Vector = list[int]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = list(zip(*b)) if b else []
    if not bt:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def snf(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form: returns (U, D, V) with U·M·V = D.

    U and V are unimodular, D is diagonal with nonnegative entries and
    d₁ | d₂ | …; pivots are chosen by least absolute value.
    """
    U, D, V, _, _ = snf_with_inverses(M)
    return U, D, V


def snf_with_inverses(M: Sequence[Sequence[int]]):
    """As :func:`snf`, also returning U⁻¹ and V⁻¹."""
    r = len(M)
    c = len(M[0]) if r else 0
    A = [list(map(int, row)) for row in M]
    U, Ui = identity(r), identity(r)
    V, Vi = identity(c), identity(c)

    def row_add(i: int, j: int, q: int) -> None:
        """row_i += q·row_j"""
        if q == 0:
            return
        Ai, Aj = A[i], A[j]
        for k in range(c):
            if Aj[k]:
                Ai[k] += q * Aj[k]
        Uii, Uj = U[i], U[j]
        for k in range(r):
            if Uj[k]:
                Uii[k] += q * Uj[k]
        # inverse: col_j of Ui -= q·col_i
        for row in Ui:
            if row[i]:
                row[j] -= q * row[i]

    def col_add(i: int, j: int, q: int) -> None:
        """col_i += q·col_j"""
        if q == 0:
            return
        for row in A:
            if row[j]:
                row[i] += q * row[j]
        for row in V:
            if row[j]:
                row[i] += q * row[j]
        Vj, Vii = Vi[j], Vi[i]
        for k in range(c):
            if Vii[k]:
                Vj[k] -= q * Vii[k]

    def row_swap(i: int, j: int) -> None:
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]
            for row in Ui:
                row[i], row[j] = row[j], row[i]

    def col_swap(i: int, j: int) -> None:
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def row_neg(i: int) -> None:
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]
        for row in Ui:
            row[i] = -row[i]

    for t in range(min(r, c)):
        best = None
        for i in range(t, r):
            Ai = A[i]
            for j in range(t, c):
                x = Ai[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        row_swap(t, best[1])
        col_swap(t, best[2])
        while True:
            p = A[t][t]
            moved = False
            for i in range(t + 1, r):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // p))
            for j in range(t + 1, c):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // p))
            # leftover remainders are smaller than |p|: make the least one the pivot
            best = None
            for i in range(t + 1, r):
                x = A[i][t]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, t)
            for j in range(t + 1, c):
                x = A[t][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), t, j)
            if best is not None:
                row_swap(t, best[1])
                col_swap(t, best[2])
                moved = True
            if moved:
                continue
            # divisibility of the remaining block by the pivot
            bad = None
            for i in range(t + 1, r):
                Ai = A[i]
                for j in range(t + 1, c):
                    if Ai[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if A[t][t] < 0:
            row_neg(t)
    return U, A, V, Ui, Vi


def diagonal(D: Sequence[Sequence[int]]) -> list[int]:
    n = min(len(D), len(D[0]) if D else 0)
    return [D[i][i] for i in range(n)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a·x + b·y = g = gcd(a, b) ≥ 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def congruence_kernel(
    n: int, equations: Sequence[tuple[dict[int, int], int]]
) -> list[Vector]:
    """Basis of {x ∈ ℤⁿ : Σ a_i x_i ≡ 0 (mod m) for every (a, m)}.

    Each equation is a sparse coefficient dict and a modulus m ≥ 0 (m = 0
    means an exact equation).  The basis is kept row-major: ``rows[i][j]``
    is coordinate i of basis vector j, so evaluating a sparse equation on
    every basis vector touches only the rows in its support.
    """
    rows: list[list[int]] = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    ncols = n
    for coeffs, m in equations:
        if ncols == 0:
            break
        vals = [0] * ncols
        for i, a in coeffs.items():
            if a:
                ri = rows[i]
                for j in range(ncols):
                    if ri[j]:
                        vals[j] += a * ri[j]
        if m:
            vals = [v % m for v in vals]
        nz = [j for j in range(ncols) if vals[j]]
        if not nz:
            continue
        # fold all nonzero values into column `piv` by unimodular column operations
        piv = min(nz, key=lambda j: abs(vals[j]))
        for j in nz:
            if j == piv or vals[j] == 0:
                continue
            g, x, y = _xgcd(vals[piv], vals[j])
            a, b = vals[piv] // g, vals[j] // g
            # new piv = x·piv + y·j ; new j = -b·piv + a·j  (determinant 1)
            for row in rows:
                p, q = row[piv], row[j]
                if p or q:
                    row[piv] = x * p + y * q
                    row[j] = a * q - b * p
            vals[piv], vals[j] = g, 0
        g = vals[piv]
        if m:
            scale = m // gcd(g, m)
            if scale != 1:
                for row in rows:
                    if row[piv]:
                        row[piv] *= scale
        else:
            for row in rows:
                del row[piv]
            ncols -= 1
    return [[rows[i][j] for i in range(n)] for j in range(ncols)]


class ColumnEchelon:
    """Echelon form of a lattice basis, for exact membership and coordinates.

    ``solve(v)`` returns integer coefficients c with Σ c_j b_j = v over the
    original basis vectors b_j, or None when v is not in their span.
    """

    def __init__(self, basis: Sequence[Sequence[int]], dim: int) -> None:
        self.dim = dim
        self.rank = len(basis)
        # work on rows = basis vectors, with an identity tag to track coefficients
        work = [(list(map(int, b)), [1 if i == j else 0 for i in range(self.rank)]) for j, b in enumerate(basis)]
        pivots: list[tuple[int, list[int], list[int]]] = []
        col = 0
        remaining = work
        while remaining and col < dim:
            live = [w for w in remaining if w[0][col]]
            dead = [w for w in remaining if not w[0][col]]
            if not live:
                col += 1
                continue
            while len(live) > 1:
                live.sort(key=lambda w: abs(w[0][col]))
                p = live[0]
                nxt = [p]
                for w in live[1:]:
                    q = w[0][col] // p[0][col]
                    vec = [a - q * b for a, b in zip(w[0], p[0])]
                    tag = [a - q * b for a, b in zip(w[1], p[1])]
                    if vec[col]:
                        nxt.append((vec, tag))
                    else:
                        dead.append((vec, tag))
                live = nxt
            p = live[0]
            if p[0][col] < 0:
                p = ([-a for a in p[0]], [-a for a in p[1]])
            pivots.append((col, p[0], p[1]))
            remaining = dead
            col += 1
        self.pivots = pivots

    def solve(self, v: Sequence[int]) -> list[int] | None:
        r = list(map(int, v))
        coeff = [0] * self.rank
        for col, vec, tag in self.pivots:
            x = r[col]
            if x == 0:
                continue
            p = vec[col]
            if x % p:
                return None
            q = x // p
            r = [a - q * b for a, b in zip(r, vec)]
            coeff = [a + q * b for a, b in zip(coeff, tag)]
        if any(r):
            return None
        return coeff


def solve_integer(M: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """One integer solution of M·x = b, or None."""
    cols = transpose(M) if M else []
    return ColumnEchelon(cols, len(M)).solve(b)
