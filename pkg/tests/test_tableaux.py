import itertools
import math

import pytest
from hypothesis import given, strategies as st

from snreps.perm import AlgebraElement, Permutation, algebra_multiply, compose
from snreps.tableaux import (
    Partition,
    StandardTableau,
    TableauFilling,
    column_antisymmetrizer,
    column_group,
    dimension,
    intertwiner,
    partitions,
    row_group,
    row_symmetrizer,
    standard_tableaux,
)


def _brute_partitions(n):
    out = set()
    for k in range(1, n + 1):
        for combo in itertools.combinations_with_replacement(range(1, n + 1), k):
            if sum(combo) == n:
                out.add(tuple(sorted(combo, reverse=True)))
    return out


def _brute_standard(shape):
    # fill the frame with every permutation of 1..n and keep the standard ones
    n = sum(shape)
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        rows, k = [], 0
        for length in shape:
            rows.append(p[k:k + length])
            k += length
        t = TableauFilling(rows)
        if t.is_standard():
            out.append(t.reading_sequence())
    return sorted(out)


def test_partitions_examples():
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))
    assert partitions(1) == ((1,),)
    assert len(partitions(7)) == 15


@pytest.mark.parametrize("n", range(1, 10))
def test_partitions_match_brute_force(n):
    ps = partitions(n)
    assert len(set(ps)) == len(ps)
    assert set(ps) == _brute_partitions(n)
    assert list(ps) == sorted(ps, reverse=True)


def test_partition_parse_and_validate():
    assert Partition.parse("3,2,2") == (3, 2, 2)
    assert str(Partition([3, 2, 2])) == "3,2,2"
    assert Partition([3, 2]).conjugate() == (2, 2, 1)
    with pytest.raises(ValueError):
        Partition([2, 3])
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_standard_tableaux_21():
    t1, t2 = standard_tableaux((2, 1))
    assert t1.rows == ((1, 2), (3,))
    assert t2.rows == ((1, 3), (2,))
    assert t1.reading_sequence() < t2.reading_sequence()
    assert str(t1) == "1 2/3"


# every shape up to n=6, plus n=7 spot checks
FILL_SHAPES = [p for n in range(1, 7) for p in partitions(n)] + [(3, 2, 2), (4, 2, 1), (7,)]


@pytest.mark.parametrize("shape", FILL_SHAPES)
def test_standard_tableaux_match_fill_and_filter(shape):
    tabs = standard_tableaux(shape)
    seqs = [t.reading_sequence() for t in tabs]
    assert seqs == _brute_standard(shape)
    assert seqs == sorted(set(seqs))
    assert len(tabs) == dimension(shape)


def test_dimension_examples():
    assert dimension((2, 1)) == 2
    assert dimension((1, 1, 1)) == 1
    assert dimension((3, 2)) == 5 == math.factorial(5) // (4 * 3 * 1 * 2 * 1)
    assert dimension((3, 2, 2)) == 21
    assert len(standard_tableaux((5,))) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_sum_of_squared_dimensions(n):
    assert sum(len(standard_tableaux(p)) ** 2 for p in partitions(n)) == math.factorial(n)


def test_standard_tableau_rejects_nonstandard():
    with pytest.raises(ValueError):
        StandardTableau([[2, 1], [3]])
    with pytest.raises(ValueError):
        TableauFilling([[1, 1], [3]])
    assert TableauFilling.parse("2 1/3").rows == ((2, 1), (3,))


def test_intertwiner_examples():
    t1, t2 = standard_tableaux((2, 1))
    assert intertwiner(t1, t1) == Permutation.identity(3)
    sigma = intertwiner(t1, t2)
    # [1 2 3] -> [1 3 2]: swap symbols 2 and 3
    assert sigma == Permutation([1, 3, 2])
    assert t1.act(sigma) == t2
    with pytest.raises(ValueError):
        intertwiner(t1, standard_tableaux((3,))[0])


@pytest.mark.parametrize("shape", [p for n in range(2, 6) for p in partitions(n)])
def test_intertwiner_chain_and_identities(shape):
    tabs = standard_tableaux(shape)
    for ti, tj, tk in itertools.product(tabs, repeat=3):
        assert compose(intertwiner(ti, tj), intertwiner(tj, tk)) == intertwiner(ti, tk)
    for ti, tj in itertools.product(tabs, repeat=2):
        s = AlgebraElement.of(intertwiner(ti, tj))
        assert algebra_multiply(column_antisymmetrizer(ti), s) == algebra_multiply(s, column_antisymmetrizer(tj))
        assert algebra_multiply(row_symmetrizer(ti), s) == algebra_multiply(s, row_symmetrizer(tj))


def test_symmetrizer_examples():
    (t,) = standard_tableaux((1, 1, 1))
    assert row_symmetrizer(t) == AlgebraElement.identity(3)
    t1 = standard_tableaux((2, 1))[0]
    assert row_symmetrizer(t1) == AlgebraElement({Permutation([1, 2, 3]): 1, Permutation([2, 1, 3]): 1})
    (row,) = standard_tableaux((3,))
    assert len(row_symmetrizer(row)) == 6 and set(row_symmetrizer(row).values()) == {1}
    assert column_antisymmetrizer(row) == AlgebraElement.identity(3)
    assert column_antisymmetrizer(t1) == AlgebraElement({Permutation([1, 2, 3]): 1, Permutation([3, 2, 1]): -1})


def test_antisymmetrizer_quasi_idempotent_22():
    for t in standard_tableaux((2, 2)):
        n_t = column_antisymmetrizer(t)
        assert algebra_multiply(n_t, n_t) == n_t.scale(len(column_group(t)))
        assert len(column_group(t)) == 4


@pytest.mark.parametrize("shape", [p for n in range(1, 6) for p in partitions(n)])
def test_group_sizes(shape):
    for t in standard_tableaux(shape):
        assert len(row_group(t)) == math.prod(math.factorial(r) for r in shape)
        assert len(column_group(t)) == math.prod(math.factorial(c) for c in Partition(shape).conjugate())


@pytest.mark.parametrize("shape", [p for n in range(1, 6) for p in partitions(n)])
def test_unique_factorization(shape):
    for t in standard_tableaux(shape):
        products = [compose(h, v) for h in row_group(t) for v in column_group(t)]
        assert len(set(products)) == len(products)


@pytest.mark.parametrize("shape", [p for n in range(2, 6) for p in partitions(n)])
def test_ordering_lemma(shape):
    tabs = standard_tableaux(shape)
    for i, j in itertools.combinations(range(len(tabs)), 2):
        # T_i < T_j: a pair sits in one row of T_i and one column of T_j
        p_i, n_j = row_symmetrizer(tabs[i]), column_antisymmetrizer(tabs[j])
        assert not algebra_multiply(n_j, p_i)
        assert not algebra_multiply(p_i, n_j)


def test_ordering_lemma_literal_form_has_counterexample():
    tabs = standard_tableaux((3, 2))
    # T_1 = 1 2 3/4 5 precedes T_5 = 1 3 5/2 4, yet N_1 P_5 does not vanish
    assert algebra_multiply(column_antisymmetrizer(tabs[0]), row_symmetrizer(tabs[4]))
    assert not algebra_multiply(column_antisymmetrizer(tabs[4]), row_symmetrizer(tabs[0]))


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(partitions(n))), st.data())
def test_action_is_a_right_action(shape, data):
    n = sum(shape)
    a = Permutation(data.draw(st.permutations(list(range(1, n + 1)))))
    b = Permutation(data.draw(st.permutations(list(range(1, n + 1)))))
    t = standard_tableaux(shape)[0]
    assert t.act(a).act(b) == t.act(compose(a, b))
