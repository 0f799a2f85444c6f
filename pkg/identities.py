"""
Graded polynomial identities for the regrade toolkit
Computes multilinear codimensions by evaluation ranks, the sorting scalar mu and exponent estimates
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import integer_nthroot
from sympy.combinatorics import Permutation
from sympy.polys.domains import QQ

import linalg
from algebra import GradedAlgebra, tensor_product
from config import get_max_n, get_state_cap
from group import GroupElement, GroupSpec
from pairing import Bicharacter, is_minimal
from regularity import PreconditionError, is_regular
from scalar import Cyclotomic

logger = logging.getLogger(__name__)

DegreeTuple = Tuple[GroupElement, ...]

ROOT_DIGITS = 6


class DegreeCapError(ValueError):
    """Raised when a codimension is requested beyond the configured degree cap"""


@dataclass
class CodimReport:
    n: int
    group_order: int
    per_tuple_ranks: Dict[DegreeTuple, int] = field(default_factory=dict)
    ordinary_codim: Optional[int] = None

    @property
    def graded_codim(self) -> int:
        return sum(self.per_tuple_ranks.values())

    def to_json(self, nonzero_only: bool = False) -> Dict:
        per_tuple = {" ".join(str(g) for g in q): rank for q, rank in self.per_tuple_ranks.items()
                     if rank or not nonzero_only}
        return {"n": self.n, "graded": self.graded_codim, "ordinary": self.ordinary_codim, "per_tuple": per_tuple}


@dataclass
class SandwichReport:
    n: int
    ordinary: int
    graded: int
    group_order: int

    @property
    def upper_bound(self) -> int:
        return self.group_order ** self.n * self.ordinary

    @property
    def lower_holds(self) -> bool:
        return self.ordinary <= self.graded

    @property
    def upper_holds(self) -> bool:
        return self.graded <= self.upper_bound

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "ordinary": self.ordinary,
            "graded": self.graded,
            "upper_bound": self.upper_bound,
            "lower_holds": self.lower_holds,
            "upper_holds": self.upper_holds,
        }


@dataclass
class TensorCodimReport:
    n: int
    lhs: int
    rhs: int
    placement: str
    fallback_tried: bool = False

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "placement": self.placement,
            "fallback_tried": self.fallback_tried,
            "note": "lhs is the G x G graded codimension of the tensor product",
        }


@dataclass
class ExponentEstimate:
    sequence: List[int]
    nth_roots: List[object]
    predicted: Optional[int]

    @property
    def exact_roots(self) -> List[Optional[int]]:
        return [int(r.numerator) if r.denominator == 1 else None for r in self.nth_roots]

    def to_json(self) -> Dict:
        return {
            "sequence": self.sequence,
            "nth_roots": [f"{r.numerator}/{r.denominator}" if r.denominator != 1 else str(r.numerator)
                          for r in self.nth_roots],
            "predicted": self.predicted,
        }


def _check_degree(n: int, max_n: Optional[int]):
    cap = get_max_n() if max_n is None else max_n
    if n < 1:
        raise DegreeCapError(f"Codimension degree must be >= 1, got {n}")
    if n > cap:
        raise DegreeCapError(f"Degree {n} exceeds the cap {cap} (set REGRADE_MAX_N to raise it)")


def _evaluation_rank(A: GradedAlgebra, slots: Sequence[Sequence[int]], n: int) -> int:
    """Rank of the (monomial x (substitution, coordinate)) evaluation matrix.

    Columns are streamed substitution by substitution and elimination stops
    once the rank reaches n!.
    """
    permutations = list(itertools.permutations(range(n)))
    full = len(permutations)
    basis = linalg.EchelonBasis(full)
    zero = Cyclotomic.zero(A.conductor)
    for choice in itertools.product(*slots):
        words = [A.evaluate_word([choice[p] for p in sigma]) for sigma in permutations]
        for k in sorted(set().union(*words)):
            basis.add([w.get(k, zero) for w in words])
            if basis.rank == full:
                return full
    return basis.rank


def codim_for_tuple(A: GradedAlgebra, q: Sequence[GroupElement], max_n: Optional[int] = None) -> int:
    """dim P_q modulo the graded identities of A, by substituting basis elements."""
    n = len(q)
    _check_degree(n, max_n)
    slots = [A.component_indices(g) for g in q]
    if any(not s for s in slots):
        return 0
    return _evaluation_rank(A, slots, n)


def graded_codimension(A: GradedAlgebra, n: int, max_n: Optional[int] = None,
                       ordinary: bool = False) -> CodimReport:
    _check_degree(n, max_n)
    report = CodimReport(n=n, group_order=A.group.order)
    for q in itertools.product(A.group.elements, repeat=n):
        report.per_tuple_ranks[q] = codim_for_tuple(A, q, max_n=n)
    if ordinary:
        report.ordinary_codim = ordinary_codimension(A, n, max_n)
    logger.info(f"✅ c_{n}^G({A.name}) = {report.graded_codim}")
    return report


def ordinary_codimension(A: GradedAlgebra, n: int, max_n: Optional[int] = None) -> int:
    _check_degree(n, max_n)
    return _evaluation_rank(A, [range(A.dim)] * n, n)


def _as_array(tau, n: int) -> List[int]:
    if not isinstance(tau, Permutation):
        tau = Permutation(list(tau))
    array = list(tau.array_form)
    if len(array) > n:
        raise ValueError(f"Permutation of size {len(array)} does not act on {n} positions")
    return array + list(range(len(array), n))


def mu_scalar(beta: Bicharacter, h: Sequence[GroupElement], tau) -> Cyclotomic:
    """Scalar turning y_tau(1) ... y_tau(n) into mu * y_1 ... y_n.

    Sorting by adjacent swaps exchanges every out-of-order pair exactly
    once, and a swap of y_a before y_b costs beta(h_a, h_b).
    """
    n = len(h)
    order = _as_array(tau, n)
    mu = Cyclotomic.one(beta.conductor)
    for i, j in itertools.combinations(range(n), 2):
        a, b = order[i], order[j]
        if a > b:
            mu = mu * beta(h[a], h[b])
    return mu


def monomial_ratio(A: GradedAlgebra, h: Sequence[GroupElement], tau) -> Optional[Cyclotomic]:
    """Ratio of X_h_tau(1) ... X_h_tau(n) to X_h1 ... X_hn, from the first basis element of each component."""
    n = len(h)
    order = _as_array(tau, n)
    picks = []
    for g in h:
        indices = A.component_indices(g)
        if not indices:
            return None
        picks.append(indices[0])
    sorted_word = A.evaluate_word(picks)
    permuted_word = A.evaluate_word([picks[a] for a in order])
    if not sorted_word or set(sorted_word) != set(permuted_word):
        return None
    k = next(iter(sorted_word))
    ratio = permuted_word[k] / sorted_word[k]
    if any(permuted_word[m] != ratio * sorted_word[m] for m in sorted_word):
        return None
    return ratio


def sandwich_check(A: GradedAlgebra, n: int, max_n: Optional[int] = None) -> SandwichReport:
    """c_n <= c_n^G <= |G|^n c_n"""
    report = graded_codimension(A, n, max_n, ordinary=True)
    return SandwichReport(n=n, ordinary=report.ordinary_codim, graded=report.graded_codim,
                          group_order=A.group.order)


def _swap_degrees(L: GradedAlgebra, G: GroupSpec) -> GradedAlgebra:
    """L graded by G x G with every degree (a, b) replaced by (b, a)."""
    degrees = []
    for d in L.degrees:
        a, b = G.split(d)
        degrees.append(G.pair(b, a))
    return GradedAlgebra(L.group, L.labels, degrees, L.products(), L.unit, name=f"{L.name}ᵀ")


def verify_tensor_codimension(B: GradedAlgebra, S: GradedAlgebra, n: int, max_n: Optional[int] = None,
                              state_cap: Optional[int] = None) -> TensorCodimReport:
    """Compare c_n of L = B (x) S over G x G with |G|^n c_n^G(S).

    L places (deg s, deg b); the transposed placement is tried only when
    the first one disagrees.
    """
    _check_degree(n, max_n)
    if S.group != B.group:
        raise PreconditionError(f"{S.name} is graded by {S.group}, the tensor identity needs {B.group}")
    verdict = is_regular(B, state_cap or get_state_cap())
    if not verdict.regular:
        raise PreconditionError(f"{B.name} is not regular; the tensor identity needs a regular factor")
    rhs = B.group.order ** n * graded_codimension(S, n, max_n).graded_codim
    L = tensor_product(S, B)
    lhs = graded_codimension(L, n, max_n).graded_codim
    report = TensorCodimReport(n=n, lhs=lhs, rhs=rhs, placement="(deg s, deg b)")
    if not report.equal:
        logger.warning(f"❌ Tensor identity fails with (deg s, deg b): {lhs} != {rhs}; trying (deg b, deg s)")
        lhs = graded_codimension(_swap_degrees(L, B.group), n, max_n).graded_codim
        report = TensorCodimReport(n=n, lhs=lhs, rhs=rhs, placement="(deg b, deg s)", fallback_tried=True)
    return report


def _root_approximant(value: int, n: int):
    root, exact = integer_nthroot(value, n)
    if exact:
        return QQ(int(root))
    scale = 10 ** ROOT_DIGITS
    approx, _ = integer_nthroot(value * scale ** n, n)
    return QQ(int(approx), scale)


def exponent_estimate(A: GradedAlgebra, n_max: int, max_n: Optional[int] = None) -> ExponentEstimate:
    """Codimension sequence up to n_max, nth roots, and |G| when the minimal-decomposition theorem applies."""
    _check_degree(n_max, max_n)
    sequence = [graded_codimension(A, n, max_n).graded_codim for n in range(1, n_max + 1)]
    roots = [_root_approximant(c, n) if c else QQ(0) for n, c in enumerate(sequence, start=1)]
    predicted = None
    verdict = is_regular(A)
    if verdict.regular and is_minimal(verdict.condition_ii.beta).minimal:
        predicted = A.group.order
    return ExponentEstimate(sequence=sequence, nth_roots=roots, predicted=predicted)
