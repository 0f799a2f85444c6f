#!/usr/bin/env python3
"""
Bicharacter and cocycle tests: validity laws, minimality and regular elements
"""

import json

import pytest

import pairing
from group import GroupSpec, parse_moduli
from scalar import zeta


def test_grassmann_decomposition_matrix():
    beta = pairing.grassmann_bicharacter()
    assert beta.matrix() == [[1, 1], [1, -1]]
    report = pairing.is_minimal(beta)
    assert report.det == -2
    assert report.minimal
    assert not report.has_equal_columns
    assert pairing.radical(beta) == [beta.group.zero]
    assert not beta.is_alternating()


def test_trivial_bicharacter_is_not_minimal():
    G = GroupSpec((2,))
    beta = pairing.trivial_bicharacter(G)
    report = pairing.is_minimal(beta)
    assert not report.minimal
    assert report.det == 0
    assert report.equal_columns_witness == (G.element((0,)), G.element((1,)))
    assert pairing.radical(beta) == list(G.elements)


def test_bicharacter_laws_are_enforced():
    G = GroupSpec((2,))
    with pytest.raises(pairing.InvalidBicharacterError):
        pairing.bicharacter_from_table(G, [[1, 1], [1, 2]])
    with pytest.raises(pairing.InvalidBicharacterError):
        pairing.bicharacter_from_generators(G, [[zeta(4)]])
    with pytest.raises(pairing.InvalidBicharacterError):
        pairing.bicharacter_from_generators(G, [[0]])
    H = GroupSpec((3,))
    with pytest.raises(pairing.InvalidBicharacterError):
        pairing.bicharacter_from_table(H, [[1, 1, 1], [1, zeta(3), zeta(3)], [1, zeta(3), zeta(3)]])


def test_generator_errors_name_the_position():
    G = GroupSpec((2, 2))
    with pytest.raises(pairing.InvalidBicharacterError, match=r"\(0,1\)"):
        pairing.bicharacter_from_generators(G, [[1, -1], [1, 1]])


def test_cocycle_identity_is_enforced():
    G = GroupSpec((2,))
    with pytest.raises(pairing.InvalidCocycleError):
        pairing.cocycle_from_table(G, [[2, 1], [1, 1]])
    with pytest.raises(pairing.InvalidCocycleError):
        pairing.cocycle_from_table(G, [[1, 1], [1, 0]])
    with pytest.raises(pairing.InvalidCocycleError):
        pairing.standard_cocycle(3, zeta(4))


def test_standard_cocycle_values():
    tau = pairing.standard_cocycle(2, -1)
    G = tau.group
    assert tau(G.element((0, 1)), G.element((1, 0))) == -1
    assert tau(G.element((1, 0)), G.element((0, 1))) == 1
    assert not tau.is_symmetric()
    beta = pairing.induced_bicharacter(tau)
    assert beta(G.element((0, 1)), G.element((1, 0))) == -1
    assert beta.is_alternating()


def test_carry_cocycle():
    tau = pairing.carry_cocycle(2)
    G = tau.group
    assert tau(G.element((1,)), G.element((1,))) == -1
    assert tau.is_symmetric()
    assert pairing.regular_elements(tau) == list(G.elements)
    assert not pairing.is_minimal(pairing.induced_bicharacter(tau)).minimal


@pytest.mark.parametrize("tau", [
    pairing.standard_cocycle(2, -1),
    pairing.standard_cocycle(3),
    pairing.standard_cocycle(4),
    pairing.standard_cocycle(4, zeta(4, 2)),
    pairing.trivial_cocycle(GroupSpec((2, 2))),
    pairing.carry_cocycle(3, zeta(3)),
])
def test_regular_elements_equal_induced_radical(tau):
    assert pairing.regular_elements(tau) == pairing.radical(pairing.induced_bicharacter(tau))


def test_non_primitive_xi_leaves_even_regular_elements():
    tau = pairing.standard_cocycle(4, zeta(4, 2))
    expected = {(0, 0), (0, 2), (2, 0), (2, 2)}
    assert {g.residues for g in pairing.regular_elements(tau)} == expected


@pytest.mark.parametrize("n", [2, 3])
def test_pauli_determinant_magnitude(n):
    beta = pairing.induced_bicharacter(pairing.standard_cocycle(n, zeta(n, -1)))
    report = pairing.is_minimal(beta)
    assert report.minimal
    assert report.det.norm_squared() == n ** (2 * n * n)


@pytest.mark.parametrize("text", ["2", "2x2", "3x3"])
def test_minimal_determinants_have_character_table_magnitude(text):
    G = parse_moduli(text)
    minimal = [beta for beta in pairing.bicharacter_family(G) if pairing.is_minimal(beta).minimal]
    assert minimal
    for beta in minimal:
        assert pairing.det_decomposition_matrix(beta).norm_squared() == G.order ** G.order


@pytest.mark.parametrize("text", ["2", "3", "4", "6", "2x2", "4x2", "3x3"])
def test_minimality_tests_agree(text):
    G = parse_moduli(text)
    for beta in pairing.bicharacter_family(G):
        report = pairing.is_minimal(beta)
        assert report.minimal == (not report.has_equal_columns) == bool(report.det)


def test_family_size():
    assert len(pairing.bicharacter_family(GroupSpec((2, 2)))) == 8
    assert len(pairing.bicharacter_family(GroupSpec((3, 3)))) == 3


def test_json_round_trip():
    beta = pairing.induced_bicharacter(pairing.standard_cocycle(3))
    data = json.loads(json.dumps(beta.to_json()))
    assert pairing.pairing_from_json(data) == beta
    tau = pairing.carry_cocycle(2)
    assert pairing.pairing_from_json(json.loads(json.dumps(tau.to_json()))) == tau


def test_json_generator_shorthand():
    data = {"group": {"moduli": [2]}, "kind": "bicharacter", "generators": [[-1]]}
    assert pairing.pairing_from_json(data) == pairing.grassmann_bicharacter()
    with pytest.raises(ValueError):
        pairing.pairing_from_json({"group": {"moduli": [2]}, "kind": "pairing", "table": [[1, 1], [1, 1]]})
    with pytest.raises(ValueError):
        pairing.pairing_from_json([1, 2])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
