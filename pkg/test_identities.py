#!/usr/bin/env python3
"""
Graded codimension tests: evaluation ranks, the sorting scalar and exponent estimates
"""

import random

import pytest
from sympy.combinatorics import Permutation
from sympy.polys.domains import QQ

import algebra
import identities
import pairing
import regularity
from group import GroupSpec


def k_alpha_z2():
    return algebra.twisted_group_algebra(pairing.carry_cocycle(2), name="K^aZ2")


def k_alpha_klein():
    return algebra.twisted_group_algebra(pairing.standard_cocycle(2, -1), name="K^a(Z2xZ2)")


def carry_tensor_local():
    return algebra.tensor_product(k_alpha_z2(), algebra.truncated_polynomial_local(1, 1))


@pytest.mark.parametrize("n, expected", [(1, 2), (2, 4), (3, 8), (4, 16)])
def test_codimensions_of_regular_cyclic_tensor(n, expected):
    report = identities.graded_codimension(carry_tensor_local(), n, max_n=4)
    assert report.graded_codim == expected
    assert set(report.per_tuple_ranks.values()) == {1}


@pytest.mark.parametrize("n, expected", [(1, 4), (2, 16), (3, 64)])
def test_codimensions_of_klein_twisted_algebra(n, expected):
    report = identities.graded_codimension(k_alpha_klein(), n, max_n=3)
    assert report.graded_codim == expected
    assert all(rank == 1 for rank in report.per_tuple_ranks.values())


def test_codim_for_tuple_with_empty_component():
    A = algebra.regrade_trivially(algebra.truncated_polynomial_local(1, 1), GroupSpec((2,)))
    odd = A.group.element((1,))
    assert identities.codim_for_tuple(A, (odd, A.group.zero), max_n=2) == 0


def test_grassmann_distinguishes_orderings():
    E = algebra.truncated_grassmann(2)
    assert identities.ordinary_codimension(E, 2, max_n=2) == 2
    odd = E.group.element((1,))
    assert identities.codim_for_tuple(E, (odd, odd), max_n=2) == 1


def test_ordinary_codimensions_of_commutative_algebras():
    V = algebra.truncated_polynomial_local(1, 1)
    assert identities.ordinary_codimension(V, 1) == 1
    assert identities.ordinary_codimension(V, 2) == 1
    assert identities.ordinary_codimension(k_alpha_z2(), 3) == 1


def test_ordinary_flag_fills_report():
    report = identities.graded_codimension(k_alpha_z2(), 2, max_n=2, ordinary=True)
    assert report.ordinary_codim == 1
    data = report.to_json(nonzero_only=True)
    assert data["graded"] == 4
    assert data["ordinary"] == 1
    assert len(data["per_tuple"]) == 4


def test_degree_cap():
    with pytest.raises(identities.DegreeCapError):
        identities.graded_codimension(k_alpha_z2(), 3, max_n=2)
    with pytest.raises(identities.DegreeCapError):
        identities.graded_codimension(k_alpha_z2(), 0, max_n=2)


def test_degree_cap_from_environment(monkeypatch):
    monkeypatch.setenv("REGRADE_MAX_N", "2")
    with pytest.raises(identities.DegreeCapError, match="REGRADE_MAX_N"):
        identities.graded_codimension(k_alpha_z2(), 3)
    assert identities.graded_codimension(k_alpha_z2(), 2).graded_codim == 4


@pytest.mark.parametrize("build", [
    k_alpha_z2,
    k_alpha_klein,
    lambda: algebra.from_presentation_example("B"),
    lambda: algebra.from_presentation_example("A2"),
    lambda: algebra.truncated_grassmann(2),
])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_sandwich_inequalities(build, n):
    report = identities.sandwich_check(build(), n, max_n=3)
    assert report.lower_holds
    assert report.upper_holds


def test_mu_scalar_for_a_swap():
    beta = pairing.grassmann_bicharacter()
    odd = beta.group.element((1,))
    assert identities.mu_scalar(beta, [odd, odd], [1, 0]) == -1
    assert identities.mu_scalar(beta, [odd, odd], [0, 1]) == 1
    assert identities.mu_scalar(beta, [odd, odd, odd], Permutation([2, 0, 1])) == 1
    assert identities.mu_scalar(beta, [odd, odd, odd], Permutation([2, 1, 0])) == -1


def test_mu_scalar_rejects_oversized_permutation():
    beta = pairing.grassmann_bicharacter()
    with pytest.raises(ValueError):
        identities.mu_scalar(beta, [beta.group.zero], [2, 0, 1])


@pytest.mark.parametrize("tau", [
    pairing.standard_cocycle(2, -1),
    pairing.standard_cocycle(3),
    pairing.carry_cocycle(3, 2),
])
def test_mu_scalar_matches_twisted_evaluations(tau):
    rng = random.Random(20240611)
    A = algebra.twisted_group_algebra(tau)
    beta = pairing.induced_bicharacter(tau)
    for _ in range(40):
        n = rng.randint(1, 5)
        h = [rng.choice(tau.group.elements) for _ in range(n)]
        order = list(range(n))
        rng.shuffle(order)
        assert identities.mu_scalar(beta, h, order) == identities.monomial_ratio(A, h, order)


@pytest.mark.parametrize("S", [k_alpha_z2, lambda: algebra.from_presentation_example("B")])
def test_tensor_codimension_identity(S):
    report = identities.verify_tensor_codimension(k_alpha_z2(), S(), 2, max_n=2)
    assert report.equal
    assert report.placement == "(deg s, deg b)"
    assert not report.fallback_tried


def test_tensor_codimension_needs_regular_factor():
    with pytest.raises(regularity.PreconditionError):
        identities.verify_tensor_codimension(algebra.truncated_grassmann(3), k_alpha_z2(), 2, max_n=2)


def test_tensor_codimension_needs_matching_groups():
    with pytest.raises(regularity.PreconditionError, match="graded by"):
        identities.verify_tensor_codimension(k_alpha_z2(), algebra.truncated_polynomial_local(1, 1), 2, max_n=2)
    S = algebra.regrade_trivially(algebra.truncated_polynomial_local(1, 1), GroupSpec((2,)))
    report = identities.verify_tensor_codimension(k_alpha_z2(), S, 2, max_n=2)
    assert report.rhs == 4 * identities.graded_codimension(S, 2, max_n=2).graded_codim
    assert report.equal


def test_swapped_placement_matches_reversed_tensor():
    B = k_alpha_z2()
    S = algebra.regrade_trivially(algebra.truncated_polynomial_local(1, 1), GroupSpec((2,)))
    L = algebra.tensor_product(S, B)
    swapped = identities._swap_degrees(L, B.group)
    G = B.group
    assert swapped.degrees == tuple(G.pair(G.split(d)[1], G.split(d)[0]) for d in L.degrees)
    reversed_report = identities.graded_codimension(algebra.tensor_product(B, S), 2, max_n=2)
    assert identities.graded_codimension(swapped, 2, max_n=2).graded_codim == reversed_report.graded_codim


def test_ordinary_codimension_of_two_by_two_matrices():
    assert identities.ordinary_codimension(algebra.pauli_matrix_algebra(2), 2, max_n=2) == 2


def test_exponent_estimate_for_minimal_grading():
    estimate = identities.exponent_estimate(k_alpha_klein(), 3, max_n=3)
    assert estimate.sequence == [4, 16, 64]
    assert estimate.exact_roots == [4, 4, 4]
    assert estimate.predicted == 4


def test_exponent_estimate_without_prediction():
    estimate = identities.exponent_estimate(carry_tensor_local(), 3, max_n=3)
    assert estimate.sequence == [2, 4, 8]
    assert estimate.nth_roots == [QQ(2), QQ(2), QQ(2)]
    assert estimate.predicted is None
    assert estimate.to_json()["nth_roots"] == ["2", "2", "2"]


def test_inexact_roots_are_rational_approximants():
    root = identities._root_approximant(5, 2)
    assert root.denominator == 10 ** identities.ROOT_DIGITS
    assert root * root < 5 < (root + QQ(1, 10 ** identities.ROOT_DIGITS)) ** 2


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
