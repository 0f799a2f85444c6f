"""
Regularity decisions for the regrade toolkit
Extracts bicharacters, decides the nonvanishing condition by subspace closure and checks the structure theorem
"""

import enum
import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import linalg
from algebra import GradedAlgebra
from config import BRUTE_FORCE_DEPTH, DEFAULT_STATE_CAP
from group import GroupElement, miller_sum
from pairing import Bicharacter, InvalidBicharacterError, is_minimal, radical
from scalar import Cyclotomic

logger = logging.getLogger(__name__)


class IndeterminatePairError(ValueError):
    """Raised when every product between two components vanishes in both orders"""

    def __init__(self, g: GroupElement, h: GroupElement):
        super().__init__(f"All products between degrees {g} and {h} vanish; beta({g},{h}) is undetermined")
        self.pair = (g, h)


class SupportError(ValueError):
    """Raised when the grading does not have full support"""


class PreconditionError(ValueError):
    """Raised when an operation needs a regular grading with a minimal decomposition"""


class ConditionIStatus(enum.Enum):
    VERIFIED = "verified"
    FAILS_AT_TUPLE = "fails_at_tuple"
    UNDECIDED_BEYOND_CAP = "undecided_beyond_cap"


@dataclass
class ConditionIIResult:
    holds: bool
    beta: Optional[Bicharacter] = None
    candidate: Optional[Bicharacter] = None
    witness: Optional[Tuple[str, str]] = None
    witness_indices: Optional[Tuple[int, int]] = None
    indeterminate_pair: Optional[Tuple[GroupElement, GroupElement]] = None

    def to_json(self) -> Dict:
        data = {"holds": self.holds}
        if self.candidate is not None:
            data["beta"] = self.candidate.to_json()
        if self.witness is not None:
            data["witness"] = list(self.witness)
        if self.indeterminate_pair is not None:
            data["indeterminate_pair"] = [g.to_json() for g in self.indeterminate_pair]
        return data


@dataclass
class ConditionIResult:
    status: ConditionIStatus
    states_explored: int
    failing_tuple: Optional[Tuple[GroupElement, ...]] = None

    @property
    def verified(self) -> bool:
        return self.status is ConditionIStatus.VERIFIED

    def to_json(self) -> Dict:
        data = {"status": self.status.value, "states_explored": self.states_explored}
        if self.failing_tuple is not None:
            data["tuple"] = [g.to_json() for g in self.failing_tuple]
        return data


@dataclass
class RegularityVerdict:
    condition_i: ConditionIResult
    condition_ii: ConditionIIResult
    support: List[GroupElement]
    full_support: bool

    @property
    def regular(self) -> bool:
        return self.full_support and self.condition_ii.holds and self.condition_i.verified

    @property
    def decided(self) -> bool:
        return self.regular or not (self.full_support and self.condition_ii.holds) or \
            self.condition_i.status is ConditionIStatus.FAILS_AT_TUPLE

    def to_json(self) -> Dict:
        return {
            "regular": self.regular if self.decided else None,
            "full_support": self.full_support,
            "support": [g.to_json() for g in self.support],
            "condition_i": self.condition_i.to_json(),
            "condition_ii": self.condition_ii.to_json(),
        }


@dataclass
class DecompositionReport:
    beta: Bicharacter
    det: Cyclotomic
    minimal: bool
    radical: List[GroupElement]
    exp_prediction: Optional[int]
    condition_ii_holds: bool
    alternating: bool

    @property
    def matrix(self) -> List[List[Cyclotomic]]:
        return self.beta.matrix()

    def to_json(self) -> Dict:
        return {
            "matrix": [[x.to_json() for x in row] for row in self.matrix],
            "det": self.det.to_json(),
            "minimal": self.minimal,
            "radical": [g.to_json() for g in self.radical],
            "exp_prediction": self.exp_prediction,
            "condition_ii_holds": self.condition_ii_holds,
            "alternating": self.alternating,
        }


@dataclass
class StructureClause:
    name: str
    holds: Optional[bool]
    detail: str

    def to_json(self) -> Dict:
        return {"clause": self.name, "holds": self.holds, "detail": self.detail}


@dataclass
class RadicalFactorization:
    units_found: bool
    dim_j: int
    dim_j0: int
    group_order: int
    span_equals_radical: bool

    @property
    def dims_match(self) -> bool:
        return self.dim_j == self.group_order * self.dim_j0

    @property
    def holds(self) -> bool:
        return self.units_found and self.dims_match and self.span_equals_radical

    def to_json(self) -> Dict:
        return {
            "units_found": self.units_found,
            "dim_J": self.dim_j,
            "dim_J0": self.dim_j0,
            "group_order": self.group_order,
            "span_equals_radical": self.span_equals_radical,
            "dims_match": self.dims_match,
        }


@dataclass
class StructureReport:
    k: int
    dim_a: int
    dim_a0: int
    dim_j: int
    dim_j0: int
    group_order: int
    a0_local: bool
    clauses: List[StructureClause] = field(default_factory=list)
    factorization: Optional[RadicalFactorization] = None

    @property
    def holds(self) -> bool:
        return all(c.holds is not False for c in self.clauses)

    def to_json(self) -> Dict:
        return {
            "k": self.k,
            "dim_A": self.dim_a,
            "dim_A0": self.dim_a0,
            "dim_J": self.dim_j,
            "dim_J0": self.dim_j0,
            "group_order": self.group_order,
            "A0_local": self.a0_local,
            "holds": self.holds,
            "clauses": [c.to_json() for c in self.clauses],
            "factorization": self.factorization.to_json() if self.factorization else None,
        }


@dataclass
class TwistedGroupReport:
    beta_commutative: bool
    zero_component_is_field: bool
    nonzero_degrees_sum_to_zero: bool
    ordered_product_nonzero: bool
    dim_equals_order: bool
    homogeneous_invertible: bool

    @property
    def hypotheses_hold(self) -> bool:
        return (self.beta_commutative and self.zero_component_is_field
                and self.nonzero_degrees_sum_to_zero and self.ordered_product_nonzero)

    @property
    def conclusion_holds(self) -> bool:
        return self.dim_equals_order and self.homogeneous_invertible

    @property
    def consistent(self) -> bool:
        return not self.hypotheses_hold or self.conclusion_holds

    def to_json(self) -> Dict:
        return {
            "beta_commutative": self.beta_commutative,
            "zero_component_is_field": self.zero_component_is_field,
            "nonzero_degrees_sum_to_zero": self.nonzero_degrees_sum_to_zero,
            "ordered_product_nonzero": self.ordered_product_nonzero,
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion_holds": self.conclusion_holds,
        }


def _proportionality(A: GradedAlgebra, i: int, j: int) -> Tuple[bool, Optional[Cyclotomic]]:
    """(nonzero, lambda) for b_i b_j = lambda b_j b_i; lambda is None when not proportional."""
    left = dict(A.product_terms(i, j))
    right = dict(A.product_terms(j, i))
    if not left and not right:
        return False, None
    if not left or not right or set(left) != set(right):
        return True, None
    k = next(iter(right))
    ratio = left[k] / right[k]
    if all(left[m] == ratio * right[m] for m in right):
        return True, ratio
    return True, None


def extract_bicharacter(A: GradedAlgebra) -> ConditionIIResult:
    """Read beta(g,h) off the first nonzero basis product, then verify it on every basis pair."""
    G = A.group
    if not A.has_full_support():
        missing = [str(g) for g in G.elements if not A.component_indices(g)]
        raise SupportError(f"{A.name} has empty components in degrees {', '.join(missing)}")
    components = {g: A.component_indices(g) for g in G.elements}
    table: Dict[Tuple[GroupElement, GroupElement], Optional[Cyclotomic]] = {}
    for g, h in itertools.product(G.elements, repeat=2):
        value = None
        seen_nonzero = False
        for i, j in itertools.product(components[g], components[h]):
            nonzero, ratio = _proportionality(A, i, j)
            seen_nonzero = seen_nonzero or nonzero
            if ratio is not None:
                value = ratio
                break
        if not seen_nonzero:
            raise IndeterminatePairError(g, h)
        table[(g, h)] = value

    candidate = None
    if all(v is not None for v in table.values()):
        try:
            candidate = Bicharacter(G, [[table[(g, h)] for h in G.elements] for g in G.elements])
        except InvalidBicharacterError as e:
            logger.debug(f"Candidate bicharacter of {A.name} is invalid: {e}")

    witness = None
    if candidate is not None:
        _, witness = A.is_beta_commutative(candidate)
    else:
        for i, j in itertools.product(range(A.dim), repeat=2):
            value = table[(A.degrees[i], A.degrees[j])]
            nonzero, ratio = _proportionality(A, i, j)
            if nonzero and (value is None or ratio is None or ratio != value):
                witness = (i, j)
                break

    holds = witness is None and candidate is not None
    result = ConditionIIResult(holds=holds, beta=candidate if holds else None, candidate=candidate)
    if witness is not None:
        result.witness_indices = witness
        result.witness = (A.labels[witness[0]], A.labels[witness[1]])
        logger.info(f"❌ {A.name} is not beta-commutative: witness {result.witness}")
    return result


def _product_space(A: GradedAlgebra, rows: Sequence[Sequence[Cyclotomic]], g: GroupElement) -> linalg.EchelonBasis:
    space = linalg.EchelonBasis(A.dim)
    indices = A.component_indices(g)
    for row in rows:
        for i in indices:
            space.add(A.multiply(row, A.basis_vector(i)))
    return space


def check_condition_i(A: GradedAlgebra, state_cap: int = DEFAULT_STATE_CAP) -> ConditionIResult:
    """Breadth-first closure over the product subspaces A_g1 ... A_gn.

    Every reachable product subspace is a state; condition (i) fails exactly
    when the zero subspace is reachable, and a finished closure decides it
    for all lengths at once.
    """
    G = A.group
    visited = set()
    queue = deque()
    for g in G.elements:
        space = linalg.span(A.component(g), A.dim)
        if space.rank == 0:
            return ConditionIResult(ConditionIStatus.FAILS_AT_TUPLE, len(visited), (g,))
        key = space.key()
        if key not in visited:
            visited.add(key)
            queue.append((space.rows(), (g,)))

    while queue:
        rows, path = queue.popleft()
        for g in G.elements:
            space = _product_space(A, rows, g)
            if space.rank == 0:
                logger.info(f"❌ Condition (i) fails for {A.name} at {[str(x) for x in path + (g,)]}")
                return ConditionIResult(ConditionIStatus.FAILS_AT_TUPLE, len(visited), path + (g,))
            key = space.key()
            if key in visited:
                continue
            visited.add(key)
            if len(visited) > state_cap:
                logger.warning(f"Condition (i) for {A.name} undecided beyond {state_cap} states")
                return ConditionIResult(ConditionIStatus.UNDECIDED_BEYOND_CAP, len(visited))
            queue.append((space.rows(), path + (g,)))

    logger.info(f"✅ Condition (i) verified for {A.name} with {len(visited)} states")
    return ConditionIResult(ConditionIStatus.VERIFIED, len(visited))


def brute_force_condition_i(A: GradedAlgebra, depth: int = BRUTE_FORCE_DEPTH) -> Optional[Tuple[GroupElement, ...]]:
    """First tuple of length <= depth with A_g1 ... A_gn = 0, level by level.

    Tuples of one length whose products span the same subspace have the same
    extensions, so each level keeps only the earliest tuple per subspace.
    """
    G = A.group
    level = []
    for g in G.elements:
        rows = A.component(g)
        if not rows:
            return (g,)
        level.append(((g,), rows))
    for _ in range(depth - 1):
        next_level: Dict[Tuple, Tuple[Tuple[GroupElement, ...], List]] = {}
        for path, rows in level:
            for g in G.elements:
                space = _product_space(A, rows, g)
                if space.rank == 0:
                    return path + (g,)
                next_level.setdefault(space.key(), (path + (g,), space.rows()))
        level = list(next_level.values())
        logger.debug(f"{A.name}: {len(level)} distinct product subspaces at length {len(level[0][0])}")
    return None


def product_vanishes_along(A: GradedAlgebra, path: Sequence[GroupElement]) -> bool:
    """True when every product of basis elements along the tuple is zero."""
    partial = [A.basis_vector(i) for i in A.component_indices(path[0])]
    for g in path[1:]:
        partial = [A.multiply(x, A.basis_vector(i)) for x in partial for i in A.component_indices(g)]
        partial = [x for x in partial if any(x)]
    return not partial


def is_regular(A: GradedAlgebra, state_cap: int = DEFAULT_STATE_CAP) -> RegularityVerdict:
    """Both regularity conditions; an empty component or a dead pair makes the grading irregular over G."""
    support = A.support()
    full = len(support) == A.group.order
    condition_i = check_condition_i(A, state_cap)
    if not full:
        condition_ii = ConditionIIResult(holds=False)
    else:
        try:
            condition_ii = extract_bicharacter(A)
        except IndeterminatePairError as e:
            condition_ii = ConditionIIResult(holds=False, indeterminate_pair=e.pair)
    verdict = RegularityVerdict(condition_i=condition_i, condition_ii=condition_ii, support=support, full_support=full)
    if verdict.regular:
        logger.info(f"✅ {A.name} is regular over {A.group}")
    return verdict


def decomposition_report(A: GradedAlgebra) -> DecompositionReport:
    """Decomposition matrix, determinant, radical and exponent prediction."""
    extraction = extract_bicharacter(A)
    beta = extraction.beta or extraction.candidate
    if beta is None:
        raise PreconditionError(f"{A.name} has no bicharacter candidate; witness {extraction.witness}")
    report = is_minimal(beta)
    predicted = A.group.order if report.minimal and extraction.holds else None
    return DecompositionReport(beta=beta, det=report.det, minimal=report.minimal, radical=radical(beta),
                               exp_prediction=predicted, condition_ii_holds=extraction.holds,
                               alternating=beta.is_alternating())


def _embed_rows(A: GradedAlgebra, rows, indices) -> List[List[Cyclotomic]]:
    embedded = []
    for row in rows:
        v = A.zero_vector()
        for p, i in enumerate(indices):
            v[i] = row[p]
        embedded.append(v)
    return embedded


def homogeneous_unit(A: GradedAlgebra, g: GroupElement) -> Optional[List[Cyclotomic]]:
    """An invertible element of A_g: a basis element, else the sum of the component basis."""
    indices = A.component_indices(g)
    candidates = [A.basis_vector(i) for i in indices]
    if len(indices) > 1:
        total = A.zero_vector()
        for v in candidates:
            total = [a + b for a, b in zip(total, v)]
        candidates.append(total)
    for v in candidates:
        if A.invert_homogeneous(v) is not None:
            return v
    return None


def radical_factorization(A: GradedAlgebra) -> RadicalFactorization:
    """Compare J(A) with the span of u_g * J(A_0) over invertible homogeneous u_g."""
    G = A.group
    J = A.jacobson_radical()
    A0, indices = A.zero_component()
    J0 = _embed_rows(A, A0.jacobson_radical(), indices)
    units = [homogeneous_unit(A, g) for g in G.elements]
    found = all(u is not None for u in units)
    span_equal = False
    if found:
        total: List[List[Cyclotomic]] = []
        for u in units:
            total = linalg.subspace_sum(total, [A.multiply(u, j) for j in J0], A.dim)
        span_equal = linalg.same_subspace(total, J)
    return RadicalFactorization(units_found=found, dim_j=len(J), dim_j0=len(J0), group_order=G.order,
                                span_equals_radical=span_equal)


def verify_structure_theorem(A: GradedAlgebra, state_cap: int = DEFAULT_STATE_CAP) -> StructureReport:
    """Check the dimension and radical consequences of A = K^alpha G (x) V."""
    verdict = is_regular(A, state_cap)
    if not verdict.regular:
        raise PreconditionError(f"{A.name} is not regular over {A.group}")
    decomposition = is_minimal(verdict.condition_ii.beta)
    if not decomposition.minimal:
        raise PreconditionError(
            f"{A.name} has a non-minimal decomposition (det M = 0); the structure theorem needs det M != 0")
    G = A.group
    order = G.order
    A0, indices = A.zero_component()
    J = A.jacobson_radical()
    J0 = A0.jacobson_radical()
    k = A0.dim - len(J0)
    report = StructureReport(k=k, dim_a=A.dim, dim_a0=A0.dim, dim_j=len(J), dim_j0=len(J0),
                             group_order=order, a0_local=(k == 1))
    clauses = report.clauses
    clauses.append(StructureClause("a", A0.is_commutative(), "A_0 is commutative"))
    clauses.append(StructureClause("b", k >= 1, f"A_0/J(A_0) has {k} one-dimensional summands"))
    clauses.append(StructureClause("c", A.dim == order * A0.dim, f"dim A = {A.dim}, |G| dim A_0 = {order * A0.dim}"))
    clauses.append(StructureClause("d", len(J) == order * len(J0),
                                   f"dim J(A) = {len(J)}, |G| dim J(A_0) = {order * len(J0)}"))
    if not J0:
        clauses.append(StructureClause("e", not J and A.dim == k * order,
                                       f"J(A_0) = 0: dim J(A) = {len(J)}, dim A = {A.dim}, k|G| = {k * order}"))
    else:
        clauses.append(StructureClause("e", None, "J(A_0) != 0"))
    if k == 1 and not J0:
        invertible = all(A.invert_homogeneous(A.basis_vector(i)) is not None for i in range(A.dim))
        clauses.append(StructureClause("f", invertible, "every homogeneous basis element is invertible"))
    else:
        clauses.append(StructureClause("f", None, "needs k = 1 and J(A_0) = 0"))
    report.factorization = radical_factorization(A)
    clauses.append(StructureClause("factorization", report.factorization.holds,
                                   "J(A) is spanned by invertible homogeneous elements times J(A_0)"))
    level = logging.INFO if report.holds else logging.WARNING
    logger.log(level, f"{'✅' if report.holds else '❌'} Structure clauses for {A.name}: k={k}")
    return report


def twisted_group_criterion(A: GradedAlgebra) -> TwistedGroupReport:
    """Hypotheses and conclusion of the twisted-group-algebra recognition criterion."""
    G = A.group
    try:
        beta_commutative = A.has_full_support() and extract_bicharacter(A).holds
    except IndeterminatePairError:
        beta_commutative = False
    total, _ = miller_sum(G)
    A0, _ = A.zero_component()
    nonzero = [g for g in G.elements if g != G.zero]
    rows = A.component(G.zero)
    for g in nonzero:
        if not rows:
            break
        rows = _product_space(A, rows, g).rows()
    product_nonzero = bool(rows) and all(A.component_indices(g) for g in nonzero)
    invertible = all(A.invert_homogeneous(A.basis_vector(i)) is not None for i in range(A.dim))
    return TwistedGroupReport(beta_commutative=beta_commutative, zero_component_is_field=(A0.dim == 1),
                              nonzero_degrees_sum_to_zero=(total == G.zero), ordered_product_nonzero=product_nonzero,
                              dim_equals_order=(A.dim == G.order), homogeneous_invertible=invertible)
