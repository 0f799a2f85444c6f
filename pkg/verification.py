"""
Bundled verification suites for the regrade toolkit
Each suite reproduces one family of quantitative claims on concrete instances
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List

import algebra
import identities
import linalg
import pairing
import regularity
from config import BRUTE_FORCE_DEPTH
from group import GroupSpec, miller_sum, miller_sum_bruteforce, parse_moduli
from regularity import ConditionIStatus
from scalar import zeta

logger = logging.getLogger(__name__)

MU_DRAWS = 200
MU_SEED = 20240611


@dataclass
class CheckResult:
    description: str
    passed: bool
    detail: str = ""

    def to_json(self) -> Dict:
        return {"check": self.description, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteResult:
    name: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def check(self, description: str, fn: Callable):
        """Run one check; fn returns a bool or (bool, detail). Exceptions count as failures."""
        try:
            outcome = fn()
        except Exception as e:
            logger.error(f"❌ {self.name}: {description} raised {type(e).__name__}: {e}")
            self.checks.append(CheckResult(description, False, f"{type(e).__name__}: {e}"))
            return
        passed, detail = outcome if isinstance(outcome, tuple) else (bool(outcome), "")
        if not passed:
            logger.warning(f"❌ {self.name}: {description} failed {detail}")
        self.checks.append(CheckResult(description, bool(passed), str(detail)))

    def to_json(self) -> Dict:
        return {"suite": self.name, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


# shared instances

def k_alpha_z2() -> algebra.GradedAlgebra:
    """K^alpha Z2 with X1^2 = -X0."""
    return algebra.twisted_group_algebra(pairing.carry_cocycle(2), name="K^aZ2")


def k_alpha_klein() -> algebra.GradedAlgebra:
    """K^alpha (Z2 x Z2) with the standard cocycle at xi = -1."""
    return algebra.twisted_group_algebra(pairing.standard_cocycle(2, -1), name="K^a(Z2xZ2)")


LOCAL_FACTORS = [(1, 1), (1, 2), (2, 1)]


def _suite_grassmann() -> SuiteResult:
    suite = SuiteResult("grassmann")
    beta = pairing.grassmann_bicharacter()
    suite.check("decomposition matrix det = -2", lambda: (pairing.det_decomposition_matrix(beta) == -2,
                                                          str(pairing.det_decomposition_matrix(beta))))
    suite.check("Grassmann decomposition is minimal", lambda: pairing.is_minimal(beta).minimal)

    def extracted():
        result = regularity.extract_bicharacter(algebra.truncated_grassmann(2))
        return result.holds and result.beta == beta, str(result.witness)

    suite.check("E(2) carries the Grassmann bicharacter", extracted)
    return suite


def _suite_pauli() -> SuiteResult:
    suite = SuiteResult("pauli")
    for n in (2, 3):
        def magnitude(n=n):
            A = algebra.pauli_matrix_algebra(n)
            report = regularity.decomposition_report(A)
            norm = report.det.norm_squared()
            return norm == n ** (2 * n * n) and report.minimal, f"det = {report.det}"

        def same_as_twisted(n=n):
            A = algebra.pauli_matrix_algebra(n)
            B = algebra.twisted_group_algebra(pairing.standard_cocycle(n, zeta(n, -1)))
            return A.same_structure(B)

        suite.check(f"|det M|^2 = {n}^{2 * n * n} for M{n}", magnitude)
        suite.check(f"M{n} matches the standard twisted group algebra", same_as_twisted)
    return suite


def _suite_aljadeff_david() -> SuiteResult:
    suite = SuiteResult("aljadeff-david")
    for moduli in ((2,), (2, 2), (3, 3)):
        G = GroupSpec(moduli)

        def magnitudes(G=G):
            minimal = 0
            for beta in pairing.bicharacter_family(G):
                report = pairing.is_minimal(beta)
                if not report.minimal:
                    continue
                minimal += 1
                if report.det.norm_squared() != G.order ** G.order:
                    return False, f"det = {report.det}"
            return minimal > 0, f"{minimal} minimal bicharacters"

        suite.check(f"det conj(det) = |G|^|G| on {G}", magnitudes)
    return suite


def _suite_minimality() -> SuiteResult:
    suite = SuiteResult("minimality")
    groups = ["2", "3", "4", "5", "6", "7", "8", "9", "2x2", "4x2", "2x2x2", "3x3"]
    for text in groups:
        G = parse_moduli(text)

        def agree(G=G):
            family = pairing.bicharacter_family(G)
            for beta in family:
                pairing.is_minimal(beta)
            return True, f"{len(family)} bicharacters"

        suite.check(f"radical, columns and det agree on {G}", agree)
    return suite


def _standard_cocycles() -> List[pairing.Cocycle]:
    return [
        pairing.standard_cocycle(2, -1),
        pairing.standard_cocycle(3),
        pairing.standard_cocycle(4),
        pairing.standard_cocycle(4, zeta(4, 2)),
        pairing.trivial_cocycle(GroupSpec((2, 2))),
        pairing.carry_cocycle(2),
        pairing.carry_cocycle(3, zeta(3, 1)),
    ]


def _suite_regular_elements() -> SuiteResult:
    suite = SuiteResult("regular-elements")
    for tau in _standard_cocycles():
        def q0_is_radical(tau=tau):
            return pairing.regular_elements(tau) == pairing.radical(pairing.induced_bicharacter(tau))

        def q0_trivial_iff_minimal(tau=tau):
            report = regularity.decomposition_report(algebra.twisted_group_algebra(tau))
            trivial = pairing.regular_elements(tau) == [tau.group.zero]
            return trivial == report.minimal, f"Q0 trivial={trivial}, minimal={report.minimal}"

        suite.check(f"Q0 = radical of induced beta on {tau.group}", q0_is_radical)
        suite.check(f"Q0 = {{0}} iff minimal on {tau.group}", q0_trivial_iff_minimal)
    return suite


def _suite_radical() -> SuiteResult:
    suite = SuiteResult("radical")
    for tau in _standard_cocycles():
        suite.check(f"J(K^tau {tau.group}) = 0",
                    lambda tau=tau: not algebra.twisted_group_algebra(tau).jacobson_radical())

    def example_b():
        B = algebra.from_presentation_example("B")
        J = B.jacobson_radical()
        expected = [B.basis_vector(1), B.basis_vector(3)]
        report = B.radical_grading_report()
        return (linalg.same_subspace(J, expected) and report.j0_dim == 1 and report.identity_holds,
                f"dim J = {len(J)}, dim J0 = {report.j0_dim}")

    suite.check("J(B) = span{z, zt}, J(B0) = span{z}, J(B0) = B0 ∩ J(B)", example_b)
    instances = [algebra.from_presentation_example("B"), algebra.from_presentation_example("A2"),
                 algebra.truncated_grassmann(3), algebra.pauli_matrix_algebra(2),
                 algebra.tensor_product(k_alpha_z2(), algebra.truncated_polynomial_local(1, 1))]
    for A in instances:
        suite.check(f"radical of {A.name} is graded with J(A0) = A0 ∩ J(A)",
                    lambda A=A: A.radical_grading_report().is_graded and A.radical_grading_report().identity_holds)

        def semisimple_quotient(A=A):
            J = A.jacobson_radical()
            Q = A.quotient(J, name=f"{A.name}/J")
            return (Q.dim == A.dim - len(J) and not Q.jacobson_radical(),
                    f"dim {Q.name} = {Q.dim}, dim J({Q.name}) = {len(Q.jacobson_radical())}")

        suite.check(f"{A.name}/J({A.name}) is semisimple", semisimple_quotient)
    return suite


def _suite_factorization() -> SuiteResult:
    suite = SuiteResult("factorization")
    for base in (k_alpha_z2(), k_alpha_klein()):
        for v, c in LOCAL_FACTORS:
            V = algebra.truncated_polynomial_local(v, c)

            def factorizes(base=base, V=V):
                A = algebra.tensor_product(base, V)
                report = regularity.radical_factorization(A)
                expected = base.group.order * len(V.jacobson_radical())
                return report.holds and report.dim_j == expected, str(report.to_json())

            suite.check(f"J({base.name} ⊗ {V.name}) = K^aG · J(V)", factorizes)
    return suite


def _suite_structure() -> SuiteResult:
    suite = SuiteResult("structure")
    base = k_alpha_klein()
    for v, c in LOCAL_FACTORS:
        V = algebra.truncated_polynomial_local(v, c)

        def tensor_clauses(V=V):
            report = regularity.verify_structure_theorem(algebra.tensor_product(base, V))
            return report.holds and report.k == 1, str(report.to_json())

        suite.check(f"structure clauses on {base.name} ⊗ {V.name}", tensor_clauses)
    for k in (1, 2, 3):
        def power_clauses(k=k):
            report = regularity.verify_structure_theorem(algebra.direct_power(base, k))
            return report.holds and report.k == k and report.dim_j == 0, str(report.to_json())

        suite.check(f"structure clauses on ({base.name})^{k}", power_clauses)

    def carry_rejected():
        try:
            regularity.verify_structure_theorem(k_alpha_z2())
        except regularity.PreconditionError:
            return True
        return False

    suite.check("non-minimal K^aZ2 is rejected", carry_rejected)
    return suite


def _suite_condition_i() -> SuiteResult:
    suite = SuiteResult("condition-i")
    verified = [algebra.from_presentation_example("B"), algebra.from_presentation_example("A2"),
                k_alpha_z2(), k_alpha_klein(),
                algebra.twisted_group_algebra(pairing.standard_cocycle(3), name="K^a(Z3xZ3)")]
    for A in verified:
        def closes(A=A):
            result = regularity.check_condition_i(A)
            return result.verified, f"{result.status.value} after {result.states_explored} states"

        def brute(A=A):
            return regularity.brute_force_condition_i(A, BRUTE_FORCE_DEPTH) is None

        suite.check(f"condition (i) verified for {A.name}", closes)
        suite.check(f"no vanishing tuple up to length {BRUTE_FORCE_DEPTH} in {A.name}", brute)

    def grassmann_fails():
        A = algebra.truncated_grassmann(3)
        result = regularity.check_condition_i(A)
        odd = A.group.element((1,))
        return (result.status is ConditionIStatus.FAILS_AT_TUPLE and result.failing_tuple == (odd,) * 4
                and regularity.product_vanishes_along(A, result.failing_tuple)
                and regularity.brute_force_condition_i(A, 6) == result.failing_tuple)

    suite.check("E(3) fails at four odd degrees", grassmann_fails)
    return suite


def _codim_instances():
    yield algebra.tensor_product(k_alpha_z2(), algebra.truncated_polynomial_local(1, 1)), 4
    yield k_alpha_klein(), 3


def _suite_codim() -> SuiteResult:
    suite = SuiteResult("codim")
    for A, n_max in _codim_instances():
        for n in range(1, n_max + 1):
            def every_tuple_one(A=A, n=n):
                report = identities.graded_codimension(A, n, max_n=n)
                expected = A.group.order ** n
                ones = all(r == 1 for r in report.per_tuple_ranks.values())
                return report.graded_codim == expected and ones, f"c_{n}^G = {report.graded_codim}"

            suite.check(f"c_{n}^G({A.name}) = |G|^{n}", every_tuple_one)
    return suite


def _suite_codim_slow() -> SuiteResult:
    suite = SuiteResult("codim-slow")
    A = k_alpha_klein()
    suite.check("c_4^G(K^a(Z2xZ2)) = 256",
                lambda: identities.graded_codimension(A, 4, max_n=4).graded_codim == 256)
    return suite


def _suite_sandwich() -> SuiteResult:
    suite = SuiteResult("sandwich")
    instances = [k_alpha_z2(), k_alpha_klein(), algebra.from_presentation_example("B"),
                 algebra.from_presentation_example("A2"), algebra.truncated_grassmann(2),
                 algebra.pauli_matrix_algebra(2)]
    for A in instances:
        for n in (1, 2, 3):
            def bounds(A=A, n=n):
                report = identities.sandwich_check(A, n, max_n=n)
                return report.lower_holds and report.upper_holds, str(report.to_json())

            suite.check(f"c_{n} <= c_{n}^G <= |G|^{n} c_{n} for {A.name}", bounds)
    return suite


def _suite_tensor() -> SuiteResult:
    suite = SuiteResult("tensor")
    B = k_alpha_z2()
    local = algebra.regrade_trivially(algebra.truncated_polynomial_local(1, 1), GroupSpec((2,)))
    for S in (k_alpha_z2(), algebra.from_presentation_example("B"), local):
        def identity(S=S):
            report = identities.verify_tensor_codimension(B, S, 2, max_n=2)
            return report.equal, str(report.to_json())

        suite.check(f"c_2(B ⊗ {S.name}) = |G|^2 c_2^G({S.name})", identity)
    return suite


def _suite_mu() -> SuiteResult:
    suite = SuiteResult("mu")
    rng = random.Random(MU_SEED)
    cocycles = [pairing.carry_cocycle(2), pairing.standard_cocycle(3), pairing.standard_cocycle(2, -1),
                pairing.carry_cocycle(3, 2)]
    models = [(tau, algebra.twisted_group_algebra(tau), pairing.induced_bicharacter(tau)) for tau in cocycles]

    def draws():
        for _ in range(MU_DRAWS):
            tau, A, beta = rng.choice(models)
            n = rng.randint(1, 5)
            h = [rng.choice(tau.group.elements) for _ in range(n)]
            order = list(range(n))
            rng.shuffle(order)
            expected = identities.monomial_ratio(A, h, order)
            actual = identities.mu_scalar(beta, h, order)
            if expected != actual:
                return False, f"h={[str(g) for g in h]}, tau={order}: {actual} != {expected}"
        return True, f"{MU_DRAWS} draws"

    suite.check("mu(h, tau) matches twisted group algebra evaluations", draws)
    return suite


def _suite_exponent() -> SuiteResult:
    suite = SuiteResult("exponent")

    def klein():
        estimate = identities.exponent_estimate(k_alpha_klein(), 3, max_n=3)
        return (estimate.predicted == 4 and estimate.exact_roots == [4, 4, 4],
                str(estimate.to_json()))

    def carry_tensor():
        A = algebra.tensor_product(k_alpha_z2(), algebra.truncated_polynomial_local(1, 1))
        estimate = identities.exponent_estimate(A, 4, max_n=4)
        return (estimate.sequence == [2, 4, 8, 16] and estimate.exact_roots == [2, 2, 2, 2]
                and estimate.predicted is None, str(estimate.to_json()))

    suite.check("exp^G(K^a(Z2xZ2)) predicted 4 with exact roots", klein)
    suite.check("K^aZ2 ⊗ K[z]/(z^2) has roots 2 and no prediction", carry_tensor)
    return suite


def _suite_miller() -> SuiteResult:
    suite = SuiteResult("miller")
    for text, expected in (("3x3", (0, 0)), ("2x2", (0, 0)), ("2", (1,)), ("4", (2,))):
        G = parse_moduli(text)

        def total(G=G, expected=expected):
            closed = miller_sum(G)
            return closed == miller_sum_bruteforce(G) and closed[0] == G.element(expected), str(closed[0])

        suite.check(f"sum of {G} = {expected}", total)
    return suite


SUITES: Dict[str, Callable[[], SuiteResult]] = {
    "grassmann": _suite_grassmann,
    "pauli": _suite_pauli,
    "aljadeff-david": _suite_aljadeff_david,
    "minimality": _suite_minimality,
    "regular-elements": _suite_regular_elements,
    "radical": _suite_radical,
    "factorization": _suite_factorization,
    "structure": _suite_structure,
    "condition-i": _suite_condition_i,
    "codim": _suite_codim,
    "sandwich": _suite_sandwich,
    "tensor": _suite_tensor,
    "mu": _suite_mu,
    "exponent": _suite_exponent,
    "miller": _suite_miller,
}

SLOW_SUITES: Dict[str, Callable[[], SuiteResult]] = {
    "codim-slow": _suite_codim_slow,
}


def suite_names(include_slow: bool = True) -> List[str]:
    names = list(SUITES)
    if include_slow:
        names.extend(SLOW_SUITES)
    return names


def run_suite(name: str) -> SuiteResult:
    runner = SUITES.get(name) or SLOW_SUITES.get(name)
    if runner is None:
        raise ValueError(f"Unknown suite '{name}'; choose from {', '.join(suite_names())}")
    logger.info(f"Running suite {name}")
    result = runner()
    logger.info(f"{'✅' if result.passed else '❌'} Suite {name}: "
                f"{sum(c.passed for c in result.checks)}/{len(result.checks)} checks passed")
    return result


def run_all(include_slow: bool = False) -> List[SuiteResult]:
    return [run_suite(name) for name in suite_names(include_slow)]
