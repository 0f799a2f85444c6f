#!/usr/bin/env python3
"""
Finite abelian group tests: enumeration, arithmetic and element sums
"""

import pytest

from group import (GroupElement, GroupShapeError, GroupSpec, count_involutions, enumerate_elements, miller_sum,
                   miller_sum_bruteforce, parse_moduli)


def test_parse_moduli_forms():
    assert parse_moduli("2x2").moduli == (2, 2)
    assert parse_moduli("Z4xZ2").moduli == (4, 2)
    assert parse_moduli("3").moduli == (3,)
    assert parse_moduli("1").moduli == ()
    assert parse_moduli("").order == 1


def test_parse_moduli_rejects_garbage():
    with pytest.raises(GroupShapeError):
        parse_moduli("two by two")
    with pytest.raises(GroupShapeError):
        GroupSpec((0,))


def test_order_exponent_and_str():
    G = parse_moduli("4x2")
    assert G.order == 8
    assert G.exponent == 4
    assert str(G) == "Z4 x Z2"
    assert str(GroupSpec(())) == "1"


def test_enumeration_is_lexicographic_with_zero_first():
    G = GroupSpec((2, 3))
    elements = enumerate_elements(G)
    assert elements[0] == G.zero
    assert [g.residues for g in elements[:4]] == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert len(set(elements)) == G.order
    assert all(G.index_of(g) == i for i, g in enumerate(elements))


def test_arithmetic_reduces_residues():
    G = GroupSpec((4, 2))
    a = G.element((3, 1))
    b = G.element((2, 1))
    assert G.add(a, b) == G.element((1, 0))
    assert G.add(a, G.neg(a)) == G.zero
    assert G.sub(a, b) == G.element((1, 0))
    assert G.scale(2, a) == G.element((2, 0))
    assert G.element((5, 3)) == G.element((1, 1))


def test_element_order():
    G = GroupSpec((4, 2))
    assert G.element_order(G.zero) == 1
    assert G.element_order(G.element((1, 0))) == 4
    assert G.element_order(G.element((2, 1))) == 2


def test_check_rejects_foreign_elements():
    G = GroupSpec((4, 2))
    with pytest.raises(GroupShapeError):
        G.check(GroupElement((4, 0)))
    with pytest.raises(GroupShapeError):
        G.add(GroupElement((1,)), G.zero)
    with pytest.raises(GroupShapeError):
        G.element((1, 2, 3))


def test_direct_product_pair_and_split():
    G = GroupSpec((2,))
    H = GroupSpec((3,))
    GH = G.direct_product(H)
    assert GH.moduli == (2, 3)
    assert G.direct_product(GroupSpec(())) == G
    gh = G.pair(G.element((1,)), H.element((2,)))
    assert GH.check(gh) == gh
    assert G.split(gh) == (G.element((1,)), H.element((2,)))


def test_json_round_trip():
    G = GroupSpec((3, 3))
    assert GroupSpec.from_json(G.to_json()) == G
    g = G.element((2, 1))
    assert G.element_from_json(g.to_json()) == g
    with pytest.raises(GroupShapeError):
        GroupSpec.from_json({"moduli": "2x2"})


def test_count_involutions():
    assert count_involutions(GroupSpec((2,))) == 1
    assert count_involutions(GroupSpec((4, 2))) == 3
    assert count_involutions(GroupSpec((3, 3))) == 0
    assert count_involutions(GroupSpec(())) == 0


@pytest.mark.parametrize("text, expected", [("3x3", (0, 0)), ("2x2", (0, 0)), ("2", (1,)), ("4", (2,))])
def test_sum_of_all_elements(text, expected):
    G = parse_moduli(text)
    total, _ = miller_sum(G)
    assert total == G.element(expected)


@pytest.mark.parametrize("text", ["1", "2", "3", "4", "6", "2x2", "4x2", "2x2x2", "3x3", "2x6"])
def test_closed_form_sum_matches_enumeration(text):
    G = parse_moduli(text)
    assert miller_sum(G) == miller_sum_bruteforce(G)


def test_sum_is_zero_unless_exactly_one_involution():
    for text in ["2", "3", "4", "6", "8", "2x2", "4x2", "3x3", "2x4x3"]:
        G = parse_moduli(text)
        total, involutions = miller_sum(G)
        assert (total != G.zero) == (involutions == 1)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
