import pytest

from oracles import graded_dims_by_relations

from qschur_hh.algebra import (AlgebraError, Arrow, BoundQuiverAlgebra, Quiver, Relation, build_A_e, center, heredity_chain_search,
                               idempotent_ideal, is_heredity_ideal, loop, radical, semisimple_algebra)
from qschur_hh.linalg import GF


@pytest.mark.parametrize("e", range(2, 9))
def test_dimension_and_center(e):
    A = build_A_e(e)
    assert A.dim == 4 * e - 3
    assert len(center(A)) == e
    assert not A.check_associative()
    assert A.check_unit()


@pytest.mark.parametrize("e", range(2, 7))
def test_dimension_matches_relation_oracle(e):
    dims = graded_dims_by_relations(e)
    assert dims[3] == dims[4] == 0
    assert sum(dims) == build_A_e(e).dim


@pytest.mark.parametrize("e", [2, 3, 5])
def test_radical_layers(e):
    A = build_A_e(e)
    assert len(radical(A, 1)) == 4 * e - 3 - e
    assert len(radical(A, 2)) == e - 1
    assert len(radical(A, 3)) == 0


def test_relations_hold():
    A = build_A_e(4)
    assert not A.path_element("a2", "a1")
    assert not A.path_element("b1", "b2")
    assert not A.path_element("a3", "b3")
    assert A.path_element("a1", "b1") == A.path_element("b2", "a2")
    assert A.path_element("b1", "a1") == loop(A, 1)
    assert loop(A, 1) * loop(A, 1) == A.zero()


def test_center_of_A2():
    A = build_A_e(2)
    assert [str(z) for z in center(A)] == ["e1 + e2", "b1*a1"]


def test_rewriting_is_confluent():
    for e in range(2, 6):
        assert build_A_e(e).confluence_violations() == []


def test_non_confluent_system_rejected():
    # listing the b arrows first orients a1 b1 = b2 a2 the other way; the overlap b2 a2 a1 does not resolve
    e = 3
    arrows = [Arrow(f"b{i}", i + 1, i) for i in range(1, e)] + [Arrow(f"a{i}", i, i + 1) for i in range(1, e)]
    quiver = Quiver(tuple(range(1, e + 1)), tuple(arrows))
    rels = [Relation(((1, ("a2", "a1")),)), Relation(((1, ("b1", "b2")),)),
            Relation(((1, ("a1", "b1")), (-1, ("b2", "a2")))), Relation(((1, ("a2", "b2")),))]
    with pytest.raises(AlgebraError, match="not confluent"):
        BoundQuiverAlgebra(quiver, rels, max_length=4)


def test_rejects_small_e():
    with pytest.raises(AlgebraError):
        build_A_e(1)


def test_json_round_trip():
    A = build_A_e(3)
    B = BoundQuiverAlgebra.from_json(A.to_json())
    assert B.labels == A.labels
    assert B.dim == A.dim


def test_prime_field_algebra():
    A = build_A_e(3, GF(2))
    assert A.dim == 9
    assert len(center(A)) == 3


def test_heredity_ideals():
    for e in range(2, 6):
        A = build_A_e(e)
        assert is_heredity_ideal(A, idempotent_ideal(A, [e])).ok
    A2 = build_A_e(2)
    res = is_heredity_ideal(A2, idempotent_ideal(A2, [1]))
    assert not res.ok
    assert res.witness == loop(A2, 1)


def test_zero_ideal_flagged():
    A = build_A_e(2)
    res = is_heredity_ideal(A, idempotent_ideal(A, []))
    assert res.ok and res.zero_ideal


@pytest.mark.parametrize("e,dims", [(2, [5, 4, 0]), (3, [9, 8, 4, 0]), (4, [13, 12, 8, 4, 0])])
def test_heredity_chain(e, dims):
    chain = heredity_chain_search(build_A_e(e))
    assert chain is not None
    assert [I.dim for I in chain] == dims


def test_semisimple_chain():
    chain = heredity_chain_search(semisimple_algebra(3))
    assert [I.dim for I in chain] == [3, 2, 1, 0]
