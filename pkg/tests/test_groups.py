import pytest
from hypothesis import given, settings, strategies as st

from crossedcoh.errors import BoundExceeded, NotAGroup, NotAnAction
from crossedcoh.fixtures import Q8, V4, klein_gamma
from crossedcoh.groups import (
    compute_out,
    cyclic_group,
    dihedral_group,
    direct_product,
    homomorphisms,
    make_gamma_group,
    make_group,
    quotient_group,
    subgroup,
    symmetric_group,
    trivial_action,
    units_mod,
)
from oracles import matrix_table, quaternion_matrices


def test_trivial_table():
    g = make_group([[0]])
    assert g.order == 1 and g.identity == 0 and g.inverses == (0,)


def test_q8_matches_quaternion_matrices():
    table = matrix_table(quaternion_matrices())
    assert Q8.order == 8
    for (a, b), c in table.items():
        assert Q8.name(Q8.table[Q8.index_of(a)][Q8.index_of(b)]) == c
    # the table also survives revalidation
    assert make_group(Q8.table).order == 8


def test_nonassociative_table_reports_triple():
    # a Latin square with identity 0 that is not associative (order 5 loop)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAGroup) as err:
        make_group(table)
    a, b, c = err.value.witness
    assert table[table[a][b]][c] != table[a][table[b][c]]


@pytest.mark.parametrize("table", [[], [[0, 1]], [[0, 1], [1, 1]], [[0, 1, 2], [1, 2, 0], [2, 1, 0]], [[0, 2], [1, 0]]])
def test_malformed_tables(table):
    with pytest.raises(NotAGroup):
        make_group(table)


def test_trivial_action_on_q8():
    gg = trivial_action(cyclic_group(2), Q8)
    assert set(gg.fixed_points()) == set(Q8.elements)


def test_klein_action_on_z8():
    gam = klein_gamma()
    Z8 = cyclic_group(8)
    units = {"1": 1, "sigma": 5, "tau": -1, "sigma*tau": -5}
    action = [tuple((units[gam.name(g)] * x) % 8 for x in Z8.elements) for g in gam.elements]
    gg = make_gamma_group(gam, Z8, action)
    assert gg.group.order == 8


def test_action_not_a_homomorphism():
    Z8 = cyclic_group(8)
    times5 = tuple((5 * x) % 8 for x in Z8.elements)
    make_gamma_group(cyclic_group(2), Z8, [tuple(Z8.elements), times5])
    # over ℤ/3 the rule 1 ↦ ×5, 2 ↦ ×5 breaks action(1+1) = action(1)∘action(1)
    with pytest.raises(NotAnAction):
        make_gamma_group(cyclic_group(3), Z8, [tuple(Z8.elements), times5, times5])


def test_action_by_non_automorphism():
    Z4 = cyclic_group(4)
    with pytest.raises(NotAnAction):
        make_gamma_group(cyclic_group(2), Z4, [tuple(Z4.elements), (0, 2, 1, 3)])


def test_out_of_klein_four():
    out = compute_out(V4)
    assert (len(out.automorphisms), len(out.inner), len(out.out_classes)) == (6, 1, 6)


def test_out_of_z8_and_trivial():
    assert len(compute_out(cyclic_group(8)).automorphisms) == 4
    assert len(compute_out(make_group([[0]])).automorphisms) == 1


def test_out_of_q8_and_s3():
    out = compute_out(Q8)
    assert (len(out.automorphisms), len(out.inner), len(out.out_classes)) == (24, 4, 6)
    out = compute_out(symmetric_group(3))
    assert (len(out.automorphisms), len(out.inner), len(out.out_classes)) == (6, 6, 1)


def test_out_bound():
    with pytest.raises(BoundExceeded):
        compute_out(cyclic_group(10), bound=8)


def test_units_mod_eight():
    U, reps = units_mod(8)
    assert U.order == 4 and sorted(reps) == [1, 3, 5, 7]


def test_center_quotient_subgroup():
    assert Q8.center == frozenset({0, 1})
    Q, proj = quotient_group(Q8, [0, 1])
    assert Q.order == 4 and all(Q.table[x][x] == Q.identity for x in Q.elements)
    H, emb = subgroup(Q8, Q8.generated([2]))
    assert H.order == 4


def test_homomorphism_count():
    # Hom(Z/2, V4) = V4, Hom(Z/4, Z/4) = Z/4
    assert len(homomorphisms(cyclic_group(2), V4)) == 4
    assert len(homomorphisms(cyclic_group(4), cyclic_group(4))) == 4
    assert len(homomorphisms(symmetric_group(3), symmetric_group(3), bijective=True)) == 6


small_groups = st.sampled_from([
    cyclic_group(1), cyclic_group(5), cyclic_group(6), symmetric_group(3),
    dihedral_group(4), Q8, direct_product(cyclic_group(2), cyclic_group(4)),
])


@settings(max_examples=40, deadline=None)
@given(small_groups, st.data())
def test_group_axioms_property(g, data):
    a = data.draw(st.integers(0, g.order - 1))
    b = data.draw(st.integers(0, g.order - 1))
    c = data.draw(st.integers(0, g.order - 1))
    t = g.table
    assert t[t[a][b]][c] == t[a][t[b][c]]
    assert t[a][g.inverses[a]] == g.identity == t[g.inverses[a]][a]
    assert g.conj(a, b) == t[t[a][b]][g.inverses[a]]


@settings(max_examples=25, deadline=None)
@given(small_groups)
def test_inner_automorphisms_are_normal(g):
    out = compute_out(g)
    for j, p in enumerate(out.automorphisms):
        pinv = [0] * g.order
        for x, y in enumerate(p):
            pinv[y] = x
        jinv = out.index[tuple(pinv)]
        for i in out.inner:
            assert out.compose(out.compose(j, i), jinv) in out.inner
    assert {len(c) for c in out.out_classes} == {len(out.inner)}
