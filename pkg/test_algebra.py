#!/usr/bin/env python3
"""
Graded algebra tests: constructors, validation, inverses, radicals and JSON export
"""

import json

import pytest

import algebra
import linalg
import pairing
from group import GroupSpec
from scalar import Cyclotomic, zeta


def k_alpha_z2():
    return algebra.twisted_group_algebra(pairing.carry_cocycle(2), name="K^aZ2")


def k_alpha_klein():
    return algebra.twisted_group_algebra(pairing.standard_cocycle(2, -1), name="K^a(Z2xZ2)")


def test_twisted_group_algebra_products():
    A = k_alpha_z2()
    assert A.dim == 2
    assert A.labels == ("X0", "X1")
    assert A.multiply_basis(1, 1) == [Cyclotomic.rational(-1), Cyclotomic.zero()]
    assert A.jacobson_radical() == []


def test_twisted_unit_compensates_nontrivial_tau_at_zero():
    G = GroupSpec((1,))
    tau = pairing.cocycle_from_table(G, [[2]])
    A = algebra.twisted_group_algebra(tau)
    assert A.unit == (Cyclotomic.rational(1) / 2,)


@pytest.mark.parametrize("n", [2, 3])
def test_pauli_algebra_is_the_standard_twisted_algebra(n):
    A = algebra.pauli_matrix_algebra(n)
    B = algebra.twisted_group_algebra(pairing.standard_cocycle(n, zeta(n, -1)))
    assert A.dim == n * n
    assert A.same_structure(B)
    assert A.name == f"M{n}(K)"


def test_pauli_labels_and_commutation():
    A = algebra.pauli_matrix_algebra(3)
    assert A.labels[:4] == ("I", "Y", "Y^2", "X")
    X, Y = A.basis_vector(3), A.basis_vector(1)
    assert A.multiply(X, Y) == [zeta(3) * c for c in A.multiply(Y, X)]


def test_pauli_needs_n_at_least_two():
    with pytest.raises(ValueError):
        algebra.pauli_matrix_algebra(1)


def test_truncated_grassmann():
    E = algebra.truncated_grassmann(2)
    assert E.labels == ("1", "e1", "e2", "e1e2")
    assert E.multiply_basis(1, 2) == E.basis_vector(3)
    assert E.multiply_basis(2, 1) == [-c for c in E.basis_vector(3)]
    assert E.multiply_basis(1, 1) == E.zero_vector()
    ok, pair = E.is_beta_commutative(pairing.grassmann_bicharacter())
    assert ok and pair is None
    assert not E.is_commutative()


def test_truncated_polynomial_local():
    V = algebra.truncated_polynomial_local(2, 2)
    assert V.labels == ("1", "z1", "z2", "z1^2", "z1z2", "z2^2")
    assert V.is_commutative()
    assert len(V.jacobson_radical()) == 5
    assert algebra.truncated_polynomial_local(1, 2).labels == ("1", "z", "z^2")


def test_validation_rejects_broken_structure_constants():
    trivial = GroupSpec(())
    with pytest.raises(algebra.AlgebraValidationError):
        algebra.GradedAlgebra(trivial, ["1"], [trivial.zero], {(0, 0): [(0, 1)]}, [2])
    G = GroupSpec((2,))
    with pytest.raises(algebra.AlgebraValidationError):
        algebra.GradedAlgebra(G, ["1", "x"], [G.element((0,)), G.element((1,))],
                              {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): [(1, 1)]}, [1, 0])
    with pytest.raises(algebra.AlgebraShapeError):
        algebra.GradedAlgebra(trivial, ["1"], [trivial.zero], {(0, 1): [(0, 1)]}, [1])


def test_validation_rejects_non_associative_products():
    trivial = GroupSpec(())
    zero = trivial.zero
    products = {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (0, 2): [(2, 1)], (2, 0): [(2, 1)],
                (1, 1): [(2, 1)], (1, 2): [(1, 1)]}
    with pytest.raises(algebra.AlgebraValidationError, match="Associativity"):
        algebra.GradedAlgebra(trivial, ["1", "a", "b"], [zero] * 3, products, [1, 0, 0])


def test_homogeneous_inverses():
    A = k_alpha_z2()
    inverse = A.invert_homogeneous(A.basis_vector(1))
    assert inverse == [Cyclotomic.zero(), Cyclotomic.rational(-1)]
    E = algebra.truncated_grassmann(2)
    assert E.invert_homogeneous(E.basis_vector(1)) is None
    with pytest.raises(algebra.NotHomogeneousError):
        E.invert_homogeneous([Cyclotomic.one()] * 4)


def test_radical_of_example_b():
    B = algebra.from_presentation_example("B")
    J = B.jacobson_radical()
    assert linalg.same_subspace(J, [B.basis_vector(1), B.basis_vector(3)])
    report = B.radical_grading_report()
    assert report.is_graded
    assert report.j_dim == 2
    assert report.j0_dim == 1
    assert report.identity_holds
    B0, indices = B.zero_component()
    assert indices == [0, 1]
    assert B0.labels == ("1", "z")
    assert linalg.same_subspace(B0.jacobson_radical(), [B0.basis_vector(1)])


def test_example_a2_grading():
    A2 = algebra.from_presentation_example("A2")
    assert [g.residues for g in A2.degrees] == [(0,), (1,), (1,), (0,)]
    z, t = A2.basis_vector(1), A2.basis_vector(2)
    assert A2.multiply(z, t) == [-c for c in A2.multiply(t, z)]
    assert A2.multiply(t, t) == A2.basis_vector(0)
    with pytest.raises(ValueError):
        algebra.from_presentation_example("C")


@pytest.mark.parametrize("build", [
    lambda: algebra.truncated_grassmann(3),
    lambda: algebra.from_presentation_example("A2"),
    lambda: algebra.pauli_matrix_algebra(2),
    lambda: algebra.tensor_product(k_alpha_z2(), algebra.truncated_polynomial_local(1, 2)),
])
def test_radical_is_graded(build):
    report = build().radical_grading_report()
    assert report.is_graded
    assert report.identity_holds


def test_quotient_by_radical_is_semisimple():
    B = algebra.from_presentation_example("B")
    Q = B.quotient(B.jacobson_radical())
    assert Q.dim == 2
    assert Q.labels == ("1", "t")
    assert Q.jacobson_radical() == []


def test_quotient_rejects_non_ideal():
    B = algebra.from_presentation_example("B")
    with pytest.raises(algebra.AlgebraValidationError):
        B.quotient([B.basis_vector(2)])


def test_tensor_product_grading():
    A = algebra.tensor_product(k_alpha_z2(), algebra.truncated_grassmann(1))
    assert A.group.moduli == (2, 2)
    assert A.dim == 4
    assert A.labels[3] == "X1⊗e1"
    assert A.degrees[3].residues == (1, 1)
    assert A.has_full_support()


def test_direct_sum_and_power():
    A = algebra.direct_power(k_alpha_klein(), 3)
    assert A.dim == 12
    assert A.labels[:2] == ("X00_1", "X01_1")
    with pytest.raises(algebra.AlgebraShapeError):
        algebra.direct_sum(k_alpha_z2(), k_alpha_klein())
    with pytest.raises(ValueError):
        algebra.direct_power(k_alpha_z2(), 0)


def test_regrade_trivially_loses_support():
    A = algebra.regrade_trivially(algebra.truncated_polynomial_local(1, 1), GroupSpec((2,)))
    assert A.support() == [GroupSpec((2,)).zero]
    assert not A.has_full_support()
    components = algebra.homogeneous_components(A)
    assert [len(components[g]) for g in A.group.elements] == [2, 0]


def test_trivial_algebra():
    K = algebra.trivial_algebra()
    assert K.dim == 1
    assert K.jacobson_radical() == []


@pytest.mark.parametrize("build", [
    k_alpha_klein,
    lambda: algebra.pauli_matrix_algebra(3),
    lambda: algebra.truncated_grassmann(2),
    lambda: algebra.from_presentation_example("A2"),
    lambda: algebra.tensor_product(k_alpha_z2(), algebra.truncated_polynomial_local(2, 1)),
])
def test_json_export_round_trip(build):
    A = build()
    data = json.loads(json.dumps(A.to_json()))
    B = algebra.algebra_from_json(data)
    assert B.same_structure(A)
    assert B.labels == A.labels
    assert B.name == A.name


def test_json_shorthand_scalars():
    data = {
        "group": {"moduli": [2]},
        "basis": [{"label": "X0", "degree": [0]}, {"label": "X1", "degree": [1]}],
        "unit": [1, 0],
        "products": {"0,0": [[0, 1]], "0,1": [[1, 1]], "1,0": [[1, 1]], "1,1": [[0, "-1"]]},
    }
    assert algebra.algebra_from_json(data).same_structure(k_alpha_z2())
    del data["unit"]
    with pytest.raises(algebra.AlgebraShapeError):
        algebra.algebra_from_json(data)


def test_homogeneous_degree_and_projection():
    A = k_alpha_klein()
    x = [Cyclotomic.one()] * 4
    assert A.homogeneous_degree(x) is None
    assert A.homogeneous_degree(A.basis_vector(2)) == A.degrees[2]
    assert A.project(x, A.degrees[1]) == A.basis_vector(1)
    with pytest.raises(algebra.AlgebraShapeError):
        A.multiply([Cyclotomic.one()], x)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
