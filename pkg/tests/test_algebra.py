import numpy as np
import pytest

from semieq.algebra import (Congruence, FiniteSemigroup, adjoin_identity, direct_product,
                            is_congruence, is_homomorphism, is_ideal, is_subsemigroup, quotient,
                            rees_quotient, subsemigroup_generated, validate)
from semieq.errors import (EmptyGeneratorSet, NonAssociative, NotACongruence, NotAnIdeal,
                           OutOfRangeEntry, TableShapeError)
from semieq.families import chain, cyclic_group, left_zero, null


def test_validate_accepts_group():
    S = validate([[0, 1], [1, 0]])
    assert S.order == 2
    assert S.identity() == 0
    assert S.idempotents() == {0}


def test_out_of_range_reports_position():
    with pytest.raises(OutOfRangeEntry) as exc:
        validate([[0, 1], [1, 2]])
    assert (exc.value.i, exc.value.j) == (1, 1)


def test_non_associative_reports_first_triple():
    table = [[0, 1, 0], [1, 0, 2], [2, 0, 1]]
    arr = np.array(table)
    first = next((i, j, k) for i in range(3) for j in range(3) for k in range(3)
                 if arr[arr[i, j], k] != arr[i, arr[j, k]])
    with pytest.raises(NonAssociative) as exc:
        validate(table)
    assert exc.value.triple == first


@pytest.mark.parametrize("table", [[[0, 1]], [], [[0.5]]])
def test_bad_shapes(table):
    with pytest.raises(TableShapeError):
        validate(table)


def test_table_is_read_only():
    S = cyclic_group(3)
    with pytest.raises(ValueError):
        S.table[0, 0] = 1


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        FiniteSemigroup([[0, 1], [1, 0]], ["a", "a"])


def test_direct_product_indexing():
    S, T = cyclic_group(2), chain(3)
    P = direct_product(S, T)
    assert P.order == 6
    for s1 in range(2):
        for t1 in range(3):
            for s2 in range(2):
                for t2 in range(3):
                    prod = P.mul(s1 * 3 + t1, s2 * 3 + t2)
                    assert prod == S.mul(s1, s2) * 3 + T.mul(t1, t2)
    P.recheck()


def test_subsemigroup_generated_sorted_embedding():
    S = cyclic_group(6)
    sub, emb = subsemigroup_generated(S, [2])
    assert emb == (0, 2, 4)
    assert sub.order == 3
    assert is_subsemigroup(S, emb)
    with pytest.raises(EmptyGeneratorSet):
        subsemigroup_generated(S, [])


def test_congruence_and_quotient():
    S = cyclic_group(4)
    c = Congruence([0, 1, 0, 1])
    assert is_congruence(S, c)
    Q = quotient(S, c)
    assert Q.order == 2 and Q.identity() is not None
    with pytest.raises(NotACongruence):
        quotient(S, Congruence([0, 0, 1, 2]))


def test_congruence_canonical_ids():
    assert Congruence([5, 5, 2]) == Congruence([0, 0, 1])
    assert Congruence.identity(3).count == 3
    assert Congruence.universal(3).count == 1


def test_rees_quotient_collapses_ideal():
    S = chain(3)   # ideal {0, 1}
    assert is_ideal(S, [0, 1])
    Q = rees_quotient(S, [0, 1])
    assert Q.order == 2
    with pytest.raises(NotAnIdeal):
        rees_quotient(S, [2])


def test_adjoin_identity():
    S = left_zero(2)
    M = adjoin_identity(S)
    assert M.order == 3 and M.identity() == 2
    G = cyclic_group(3)
    assert adjoin_identity(G) is G


def test_homomorphism_check():
    S, T = cyclic_group(4), cyclic_group(2)
    assert is_homomorphism(S, T, [0, 1, 0, 1])
    assert not is_homomorphism(S, T, [0, 1, 1, 0])


def test_evaluate_word_and_labels():
    S = null(3)
    assert S.evaluate_word([1, 2]) == 0
    assert S.label(0) == "0" and S.index("n1") == 1
