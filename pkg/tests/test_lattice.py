import itertools

from hypothesis import given, settings, strategies as st

from crossedcoh.lattice import (
    ColumnEchelon,
    congruence_kernel,
    diagonal,
    identity,
    matmul,
    matvec,
    snf,
    snf_with_inverses,
    solve_integer,
)
from oracles import _det, determinantal_invariants


def test_identity_matrix():
    _, D, _ = snf(identity(3))
    assert D == identity(3)


def test_two_three():
    _, D, _ = snf([[2, 0], [0, 3]])
    assert diagonal(D) == [1, 6]


def test_zero_matrix():
    U, D, V = snf([[0, 0, 0], [0, 0, 0]])
    assert D == [[0, 0, 0], [0, 0, 0]]


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-12, 12), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_against_determinantal_divisors(M):
    U, D, V, Ui, Vi = snf_with_inverses(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    assert matmul(U, Ui) == identity(len(M)) and matmul(V, Vi) == identity(len(M[0]))
    d = diagonal(D)
    r, c = len(M), len(M[0])
    assert all(D[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    nonzero = [x for x in d if x]
    assert all(x >= 0 for x in d)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert d[: len(nonzero)] == nonzero  # zeros come last
    assert nonzero == determinantal_invariants(M)


@settings(max_examples=80, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.tuples(st.lists(st.integers(-5, 5), min_size=n, max_size=n), st.sampled_from([0, 2, 3, 4, 6])),
                min_size=1, max_size=3,
            ),
        )
    )
)
def test_congruence_kernel(args):
    n, eqs = args
    equations = [({i: a for i, a in enumerate(coeffs) if a}, m) for coeffs, m in eqs]
    basis = congruence_kernel(n, equations)

    def sat(x):
        return all(
            (sum(a * x[i] for i, a in co.items()) % m == 0) if m else sum(a * x[i] for i, a in co.items()) == 0
            for co, m in equations
        )

    assert all(sat(v) for v in basis)
    # every small solution lies in the span
    ech = ColumnEchelon(basis, n)
    box = range(-3, 4)
    for x in itertools.product(box, repeat=min(n, 3)):
        x = list(x) + [0] * (n - len(x))
        if sat(x):
            assert ech.solve(x) is not None


def test_solve_integer():
    M = [[2, 4], [6, 8]]
    x = solve_integer(M, [2, 6])
    assert matvec(M, x) == [2, 6]
    assert solve_integer([[2]], [3]) is None
