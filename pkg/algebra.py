"""
Finite-dimensional graded algebras for the regrade toolkit
Handles structure constants, validation, homogeneous inverses, radicals and the standard constructors
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import linalg
import scalar
from group import GroupElement, GroupSpec
from pairing import Bicharacter, Cocycle
from scalar import Cyclotomic, zeta

logger = logging.getLogger(__name__)

Sparse = Dict[int, Cyclotomic]
Products = Dict[Tuple[int, int], Sequence[Tuple[int, object]]]


class AlgebraShapeError(ValueError):
    """Raised when vectors or algebras have incompatible shapes"""


class AlgebraValidationError(ValueError):
    """Raised when structure constants break grading, associativity or the unit law"""


class NotHomogeneousError(ValueError):
    """Raised when an operation needs a homogeneous element"""


class RadicalConsistencyError(RuntimeError):
    """Raised when the trace-form radical is not a nilpotent two-sided ideal"""


@dataclass(frozen=True)
class RadicalGradingReport:
    is_graded: bool
    j_dim: int
    j0_dim: int
    identity_holds: bool

    def to_json(self) -> Dict:
        return {
            "is_graded": self.is_graded,
            "J_dim": self.j_dim,
            "J0_dim": self.j0_dim,
            "identity_holds": self.identity_holds,
        }


def _add_into(target: Sparse, k: int, value: Cyclotomic):
    total = target.get(k)
    total = value if total is None else total + value
    if total:
        target[k] = total
    else:
        target.pop(k, None)


class GradedAlgebra:
    """Unital associative algebra with a homogeneous basis b_0..b_{d-1}.

    products[(i, j)] lists the nonzero (k, c) with b_i b_j = sum c b_k;
    missing pairs multiply to zero.
    """

    def __init__(self, group: GroupSpec, labels: Sequence[str], degrees: Sequence[GroupElement],
                 products: Products, unit: Sequence, name: str = "", validate: bool = True):
        if len(labels) != len(degrees) or len(unit) != len(labels):
            raise AlgebraShapeError(
                f"{len(labels)} labels, {len(degrees)} degrees and a unit of length {len(unit)} do not match")
        self.group = group
        self.labels = tuple(labels)
        self.degrees = tuple(group.check(g) for g in degrees)
        self.name = name or "A"
        dim = len(self.labels)
        table: List[List[Tuple[Tuple[int, Cyclotomic], ...]]] = [[()] * dim for _ in range(dim)]
        for (i, j), terms in products.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise AlgebraShapeError(f"Product index ({i},{j}) outside a basis of size {dim}")
            accumulated: Sparse = {}
            for k, c in terms:
                if not 0 <= k < dim:
                    raise AlgebraShapeError(f"Product b{i}*b{j} refers to basis index {k}")
                _add_into(accumulated, k, scalar.as_cyclotomic(c))
            table[i][j] = tuple(sorted(accumulated.items()))
        self._mul = tuple(tuple(row) for row in table)
        self.unit = tuple(scalar.as_cyclotomic(c) for c in unit)
        values = [c for row in self._mul for cell in row for _, c in cell] + list(self.unit)
        self.conductor = scalar.common_conductor(values)
        if validate:
            self.validate()

    @property
    def dim(self) -> int:
        return len(self.labels)

    # vectors

    def zero_vector(self) -> List[Cyclotomic]:
        return linalg.zero_vector(self.dim, self.conductor)

    def basis_vector(self, i: int) -> List[Cyclotomic]:
        v = self.zero_vector()
        v[i] = Cyclotomic.one(self.conductor)
        return v

    def _check_vector(self, x: Sequence[Cyclotomic]):
        if len(x) != self.dim:
            raise AlgebraShapeError(f"Vector of length {len(x)} in an algebra of dimension {self.dim}")

    def _to_dense(self, sparse: Sparse) -> List[Cyclotomic]:
        v = self.zero_vector()
        for k, c in sparse.items():
            v[k] = c
        return v

    def _mul_sparse(self, x: Sparse, y: Sparse) -> Sparse:
        out: Sparse = {}
        for i, a in x.items():
            row = self._mul[i]
            for j, b in y.items():
                cell = row[j]
                if not cell:
                    continue
                ab = a * b
                for k, c in cell:
                    _add_into(out, k, ab * c)
        return out

    def product_terms(self, i: int, j: int) -> Tuple[Tuple[int, Cyclotomic], ...]:
        return self._mul[i][j]

    def multiply_basis(self, i: int, j: int) -> List[Cyclotomic]:
        return self._to_dense(dict(self._mul[i][j]))

    def evaluate_word(self, indices: Sequence[int]) -> Sparse:
        """b_{i1} b_{i2} ... b_{in} as a sparse vector."""
        if not indices:
            return {i: c for i, c in enumerate(self.unit) if c}
        result = {indices[0]: Cyclotomic.one(self.conductor)}
        for i in indices[1:]:
            result = self._mul_sparse(result, {i: Cyclotomic.one(self.conductor)})
            if not result:
                break
        return result

    def multiply(self, x: Sequence[Cyclotomic], y: Sequence[Cyclotomic]) -> List[Cyclotomic]:
        self._check_vector(x)
        self._check_vector(y)
        xs = {i: c for i, c in enumerate(x) if c}
        ys = {j: c for j, c in enumerate(y) if c}
        return self._to_dense(self._mul_sparse(xs, ys))

    # validation

    def validate(self):
        """Grading consistency, unit law and associativity over all basis tuples."""
        G = self.group
        dim = self.dim
        for i, j in itertools.product(range(dim), repeat=2):
            expected = G.add(self.degrees[i], self.degrees[j])
            for k, _ in self._mul[i][j]:
                if self.degrees[k] != expected:
                    raise AlgebraValidationError(
                        f"{self.labels[i]}*{self.labels[j]} has a term in {self.labels[k]} "
                        f"of degree {self.degrees[k]}, expected {expected}")
        unit = {i: c for i, c in enumerate(self.unit) if c}
        if not unit:
            raise AlgebraValidationError("The unit vector is zero")
        for i in range(dim):
            basis = {i: Cyclotomic.one(self.conductor)}
            if self._mul_sparse(unit, basis) != basis or self._mul_sparse(basis, unit) != basis:
                raise AlgebraValidationError(f"Unit law fails on {self.labels[i]}")
        for i, j in itertools.product(range(dim), repeat=2):
            left_ij = dict(self._mul[i][j])
            for k in range(dim):
                left = self._mul_sparse(left_ij, {k: Cyclotomic.one(self.conductor)})
                right = self._mul_sparse({i: Cyclotomic.one(self.conductor)}, dict(self._mul[j][k]))
                if left != right:
                    raise AlgebraValidationError(
                        f"Associativity fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")
        logger.info(f"✅ Validated {self.name}: dim {dim} over {G}")

    # grading

    def component_indices(self, g: GroupElement) -> List[int]:
        return [i for i, d in enumerate(self.degrees) if d == g]

    def component(self, g: GroupElement) -> List[List[Cyclotomic]]:
        """Basis vectors of A_g."""
        return [self.basis_vector(i) for i in self.component_indices(g)]

    def support(self) -> List[GroupElement]:
        present = set(self.degrees)
        return [g for g in self.group.elements if g in present]

    def has_full_support(self) -> bool:
        return len(self.support()) == self.group.order

    def homogeneous_degree(self, x: Sequence[Cyclotomic]) -> Optional[GroupElement]:
        """Degree of a nonzero homogeneous vector, None otherwise."""
        self._check_vector(x)
        found = {self.degrees[i] for i, c in enumerate(x) if c}
        return found.pop() if len(found) == 1 else None

    def project(self, x: Sequence[Cyclotomic], g: GroupElement) -> List[Cyclotomic]:
        self._check_vector(x)
        return [c if self.degrees[i] == g else Cyclotomic.zero(self.conductor) for i, c in enumerate(x)]

    # elementwise questions

    def left_multiplication(self, x: Sequence[Cyclotomic]) -> List[List[Cyclotomic]]:
        """Matrix of y -> x*y; column j is x*b_j."""
        columns = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return linalg.transpose(columns)

    def invert_homogeneous(self, x: Sequence[Cyclotomic]) -> Optional[List[Cyclotomic]]:
        """Solve x*y = 1; a right inverse is also a left inverse."""
        if self.homogeneous_degree(x) is None:
            raise NotHomogeneousError(f"Element {[str(c) for c in x]} of {self.name} is not homogeneous")
        y = linalg.solve(self.left_multiplication(x), list(self.unit))
        if y is None:
            return None
        if self.multiply(y, x) != list(self.unit):
            raise RuntimeError(f"Right inverse in {self.name} is not a left inverse")
        return y

    def is_commutative(self) -> bool:
        return all(self._mul[i][j] == self._mul[j][i] for i, j in itertools.combinations(range(self.dim), 2))

    def is_beta_commutative(self, beta: Bicharacter) -> Tuple[bool, Optional[Tuple[int, int]]]:
        """b_i b_j = beta(deg i, deg j) b_j b_i on all basis pairs; returns the first violating pair."""
        for i, j in itertools.product(range(self.dim), repeat=2):
            factor = beta(self.degrees[i], self.degrees[j])
            left = dict(self._mul[i][j])
            right = {k: factor * c for k, c in self._mul[j][i]}
            if left != right:
                return False, (i, j)
        return True, None

    # radical

    @cached_property
    def _radical(self) -> Tuple[Tuple[Cyclotomic, ...], ...]:
        dim = self.dim
        # trace(L_{b_k}) = sum_l c_{kl}^l
        traces = []
        for k in range(dim):
            t = Cyclotomic.zero(self.conductor)
            for l in range(dim):
                for m, c in self._mul[k][l]:
                    if m == l:
                        t = t + c
            traces.append(t)
        gram = []
        for i in range(dim):
            row = []
            for j in range(dim):
                entry = Cyclotomic.zero(self.conductor)
                for k, c in self._mul[i][j]:
                    if traces[k]:
                        entry = entry + c * traces[k]
                row.append(entry)
            gram.append(row)
        rows = linalg.nullspace(gram, dim, self.conductor)
        self._check_radical(rows)
        logger.info(f"✅ Radical of {self.name}: dim {len(rows)}")
        return tuple(tuple(r) for r in rows)

    def _check_radical(self, rows: List[List[Cyclotomic]]):
        J = linalg.span(rows, self.dim)
        for v in rows:
            for i in range(self.dim):
                b = self.basis_vector(i)
                if not J.contains(self.multiply(b, v)) or not J.contains(self.multiply(v, b)):
                    raise RadicalConsistencyError(f"Trace-form radical of {self.name} is not a two-sided ideal")
        power = [list(r) for r in rows]
        for _ in range(self.dim + 1):
            if not power:
                return
            power = linalg.span([self.multiply(p, v) for p in power for v in rows], self.dim).rows()
        if power:
            raise RadicalConsistencyError(f"Trace-form radical of {self.name} is not nilpotent")

    def jacobson_radical(self) -> List[List[Cyclotomic]]:
        """RREF basis of J(A) = {x : trace(L_xy) = 0 for all y}."""
        return [list(r) for r in self._radical]

    def zero_component(self) -> Tuple['GradedAlgebra', List[int]]:
        """A_0 as a trivially graded algebra, with the basis indices it occupies."""
        zero = self.group.zero
        indices = self.component_indices(zero)
        position = {i: p for p, i in enumerate(indices)}
        if any(c and i not in position for i, c in enumerate(self.unit)):
            raise AlgebraValidationError(f"Unit of {self.name} does not lie in the zero component")
        products = {}
        for p, i in enumerate(indices):
            for q, j in enumerate(indices):
                if self._mul[i][j]:
                    products[(p, q)] = [(position[k], c) for k, c in self._mul[i][j]]
        trivial = GroupSpec(())
        A0 = GradedAlgebra(trivial, [self.labels[i] for i in indices], [trivial.zero] * len(indices),
                           products, [self.unit[i] for i in indices], name=f"{self.name}_0", validate=False)
        return A0, indices

    def radical_grading_report(self) -> RadicalGradingReport:
        J = self.jacobson_radical()
        J_span = linalg.span(J, self.dim)
        is_graded = all(J_span.contains(self.project(v, g)) for v in J for g in self.group.elements)
        A0, indices = self.zero_component()
        J0 = []
        for row in A0.jacobson_radical():
            v = self.zero_vector()
            for p, i in enumerate(indices):
                v[i] = row[p]
            J0.append(v)
        A0_rows = [self.basis_vector(i) for i in indices]
        meet = linalg.subspace_intersection(A0_rows, J, self.dim, self.conductor)
        identity_holds = linalg.same_subspace(meet, J0)
        if not (is_graded and identity_holds):
            logger.warning(f"❌ Radical of {self.name}: graded={is_graded}, J(A0) identity={identity_holds}")
        return RadicalGradingReport(is_graded=is_graded, j_dim=len(J), j0_dim=len(J0),
                                    identity_holds=identity_holds)

    def quotient(self, ideal: Sequence[Sequence[Cyclotomic]], name: str = "") -> 'GradedAlgebra':
        """A/I for a graded two-sided ideal I, on the non-pivot basis elements."""
        I = linalg.span(ideal, self.dim)
        for v in I.rows():
            if self.homogeneous_degree(v) is None and any(v):
                raise AlgebraValidationError(f"Ideal of {self.name} is not spanned by homogeneous elements")
            for i in range(self.dim):
                b = self.basis_vector(i)
                if not I.contains(self.multiply(b, v)) or not I.contains(self.multiply(v, b)):
                    raise AlgebraValidationError(f"Subspace of {self.name} is not a two-sided ideal")
        pivots = set(I.pivots())
        kept = [i for i in range(self.dim) if i not in pivots]
        position = {i: p for p, i in enumerate(kept)}

        def reduced(v):
            r = I.reduce(v)
            return [(position[i], c) for i, c in enumerate(r) if c]

        products = {}
        for p, i in enumerate(kept):
            for q, j in enumerate(kept):
                terms = reduced(self.multiply_basis(i, j))
                if terms:
                    products[(p, q)] = terms
        unit = [Cyclotomic.zero(self.conductor)] * len(kept)
        for p, c in reduced(list(self.unit)):
            unit[p] = c
        return GradedAlgebra(self.group, [self.labels[i] for i in kept], [self.degrees[i] for i in kept],
                             products, unit, name=name or f"{self.name}/I")

    # serialization

    def products(self) -> Dict[Tuple[int, int], Tuple[Tuple[int, Cyclotomic], ...]]:
        return {(i, j): self._mul[i][j] for i, j in itertools.product(range(self.dim), repeat=2)
                if self._mul[i][j]}

    def same_structure(self, other: 'GradedAlgebra') -> bool:
        return (self.group == other.group and self.degrees == other.degrees
                and self._mul == other._mul and self.unit == other.unit)

    def to_json(self) -> Dict:
        return {
            "name": self.name,
            "group": self.group.to_json(),
            "conductor": self.conductor,
            "basis": [{"label": label, "degree": g.to_json()} for label, g in zip(self.labels, self.degrees)],
            "unit": [c.to_json() for c in self.unit],
            "products": {f"{i},{j}": [[k, c.to_json()] for k, c in terms]
                         for (i, j), terms in self.products().items()},
        }

    def __repr__(self) -> str:
        return f"GradedAlgebra({self.name}, dim={self.dim}, group={self.group})"


def algebra_from_json(data: Dict) -> GradedAlgebra:
    """Decode the algebra file format; scalars accept the usual shorthands."""
    if not isinstance(data, dict):
        raise AlgebraShapeError(f"Expected an algebra object, got {type(data).__name__}")
    where = "group"
    try:
        G = GroupSpec.from_json(data["group"])
        where = "conductor"
        conductor = int(data.get("conductor", 1))
        labels, degrees = [], []
        for position, entry in enumerate(data["basis"]):
            where = f"basis[{position}]"
            labels.append(str(entry["label"]))
            degrees.append(G.element_from_json(entry["degree"]))
        where = "unit"
        unit = [scalar.from_json(c, conductor) for c in data["unit"]]
        products = {}
        for key, terms in data.get("products", {}).items():
            where = f"products['{key}']"
            i, _, j = key.partition(',')
            products[(int(i), int(j))] = [(int(k), scalar.from_json(c, conductor)) for k, c in terms]
    except KeyError as e:
        raise AlgebraShapeError(f"Algebra object is missing {e} in {where}")
    except (TypeError, ValueError, AttributeError) as e:
        raise AlgebraShapeError(f"Malformed {where}: {e}")
    return GradedAlgebra(G, labels, degrees, products, unit, name=data.get("name", "A"))


# module-level operations

def multiply(A: GradedAlgebra, x: Sequence[Cyclotomic], y: Sequence[Cyclotomic]) -> List[Cyclotomic]:
    return A.multiply(x, y)


def invert_homogeneous(A: GradedAlgebra, x: Sequence[Cyclotomic]) -> Optional[List[Cyclotomic]]:
    return A.invert_homogeneous(x)


def jacobson_radical(A: GradedAlgebra) -> List[List[Cyclotomic]]:
    return A.jacobson_radical()


def radical_grading_report(A: GradedAlgebra) -> RadicalGradingReport:
    return A.radical_grading_report()


def zero_component(A: GradedAlgebra) -> Tuple[GradedAlgebra, List[int]]:
    return A.zero_component()


def support(A: GradedAlgebra) -> List[GroupElement]:
    return A.support()


def homogeneous_components(A: GradedAlgebra) -> Dict[GroupElement, List[List[Cyclotomic]]]:
    """A_g for every g in G, empty components included."""
    return {g: A.component(g) for g in A.group.elements}


# constructors

def _residue_label(prefix: str, g: GroupElement) -> str:
    if all(r < 10 for r in g.residues):
        return prefix + "".join(str(r) for r in g.residues)
    return prefix + str(g)


def twisted_group_algebra(tau: Cocycle, name: str = "") -> GradedAlgebra:
    """K^tau G with X_g X_h = tau(g,h) X_{g+h}."""
    G = tau.group
    elements = G.elements
    products = {}
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            products[(i, j)] = [(G.index_of(G.add(g, h)), tau(g, h))]
    unit = [Cyclotomic.zero(tau.conductor)] * G.order
    unit[0] = tau(G.zero, G.zero).invert()
    return GradedAlgebra(G, [_residue_label("X", g) for g in elements], elements, products, unit,
                         name=name or f"K^tau({G})")


def _pauli_label(i: int, j: int) -> str:
    parts = []
    for symbol, power in (("X", i), ("Y", j)):
        if power == 1:
            parts.append(symbol)
        elif power > 1:
            parts.append(f"{symbol}^{power}")
    return "".join(parts) or "I"


def _matmul(a, b):
    n = len(a)
    conductor = scalar.common_conductor(x for row in a + b for x in row)
    out = [[Cyclotomic.zero(conductor) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if not a[i][k]:
                continue
            for j in range(n):
                if b[k][j]:
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def pauli_matrices(n: int) -> Tuple[List[List[Cyclotomic]], List[List[Cyclotomic]]]:
    """X = diag(xi^(n-1), ..., xi, 1) and the cyclic shift Y, with xi = zeta_n."""
    xi = zeta(n, 1)
    X = [[Cyclotomic.zero(n) for _ in range(n)] for _ in range(n)]
    Y = [[Cyclotomic.zero(n) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        X[i][i] = xi ** (n - 1 - i)
        Y[i][(i + 1) % n] = Cyclotomic.one(n)
    return X, Y


def pauli_matrix_algebra(n: int) -> GradedAlgebra:
    """M_n(K) with basis X^i Y^j in degree (i,j) of Z_n x Z_n, read off explicit matrices."""
    if n < 2:
        raise ValueError(f"Pauli grading needs n >= 2, got {n}")
    X, Y = pauli_matrices(n)
    identity = [[Cyclotomic.one(n) if i == j else Cyclotomic.zero(n) for j in range(n)] for i in range(n)]
    x_powers, y_powers = [identity], [identity]
    for _ in range(n - 1):
        x_powers.append(_matmul(x_powers[-1], X))
        y_powers.append(_matmul(y_powers[-1], Y))
    G = GroupSpec((n, n))
    basis = [_matmul(x_powers[g.residues[0]], y_powers[g.residues[1]]) for g in G.elements]
    flat = [[x for row in m for x in row] for m in basis]
    coordinates = linalg.transpose(flat)

    def expand(matrix):
        solution = linalg.solve(coordinates, [x for row in matrix for x in row])
        if solution is None:
            raise RuntimeError("Pauli monomials do not span M_n")
        return [(k, c) for k, c in enumerate(solution) if c]

    products = {}
    for i, j in itertools.product(range(G.order), repeat=2):
        products[(i, j)] = expand(_matmul(basis[i], basis[j]))
    unit = [Cyclotomic.zero(n)] * G.order
    for k, c in expand(identity):
        unit[k] = c
    labels = [_pauli_label(*g.residues) for g in G.elements]
    return GradedAlgebra(G, labels, G.elements, products, unit, name=f"M{n}(K)")


def _sign_of_merge(S: Tuple[int, ...], T: Tuple[int, ...]) -> int:
    inversions = sum(1 for s in S for t in T if s > t)
    return -1 if inversions % 2 else 1


def truncated_grassmann(r: int) -> GradedAlgebra:
    """Grassmann algebra on r generators, Z2-graded by word length parity."""
    if r < 1:
        raise ValueError(f"Grassmann truncation needs r >= 1, got {r}")
    G = GroupSpec((2,))
    subsets = [S for size in range(r + 1) for S in itertools.combinations(range(1, r + 1), size)]
    index = {S: i for i, S in enumerate(subsets)}
    products = {}
    for S, T in itertools.product(subsets, repeat=2):
        if set(S) & set(T):
            continue
        merged = tuple(sorted(S + T))
        products[(index[S], index[T])] = [(index[merged], _sign_of_merge(S, T))]
    labels = ["".join(f"e{i}" for i in S) or "1" for S in subsets]
    degrees = [G.element((len(S) % 2,)) for S in subsets]
    unit = [1] + [0] * (len(subsets) - 1)
    return GradedAlgebra(G, labels, degrees, products, unit, name=f"E({r})")


def _monomial_label(exponents: Tuple[int, ...]) -> str:
    names = ["z"] if len(exponents) == 1 else [f"z{i + 1}" for i in range(len(exponents))]
    parts = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, exponents) if e]
    return "".join(parts) or "1"


def truncated_polynomial_local(variables: int, cap: int) -> GradedAlgebra:
    """K[z_1..z_v] modulo all monomials of degree > cap, trivially graded."""
    if variables < 1 or cap < 1:
        raise ValueError(f"Local algebra needs vars >= 1 and cap >= 1, got {variables},{cap}")
    monomials = [m for m in itertools.product(range(cap + 1), repeat=variables) if sum(m) <= cap]
    monomials.sort(key=lambda m: (sum(m), tuple(-e for e in m)))
    index = {m: i for i, m in enumerate(monomials)}
    products = {}
    for a, b in itertools.product(monomials, repeat=2):
        c = tuple(x + y for x, y in zip(a, b))
        if sum(c) <= cap:
            products[(index[a], index[b])] = [(index[c], 1)]
    trivial = GroupSpec(())
    unit = [1] + [0] * (len(monomials) - 1)
    return GradedAlgebra(trivial, [_monomial_label(m) for m in monomials], [trivial.zero] * len(monomials),
                         products, unit, name=f"local({variables},{cap})")


def trivial_algebra() -> GradedAlgebra:
    trivial = GroupSpec(())
    return GradedAlgebra(trivial, ["1"], [trivial.zero], {(0, 0): [(0, 1)]}, [1], name="K")


def regrade_trivially(A: GradedAlgebra, G: GroupSpec) -> GradedAlgebra:
    """The same algebra with every basis element placed in degree 0 of G."""
    return GradedAlgebra(G, A.labels, [G.zero] * A.dim, A.products(), A.unit, name=f"{A.name}[{G}]")


def tensor_product(A: GradedAlgebra, B: GradedAlgebra, name: str = "") -> GradedAlgebra:
    """A (x) B graded by G x H with deg(a (x) b) = (deg a, deg b)."""
    G = A.group.direct_product(B.group)
    dim_b = B.dim
    labels, degrees = [], []
    for i in range(A.dim):
        for j in range(dim_b):
            labels.append(f"{A.labels[i]}⊗{B.labels[j]}")
            degrees.append(A.group.pair(A.degrees[i], B.degrees[j]))
    products = {}
    for (i, k), a_terms in A.products().items():
        for (j, l), b_terms in B.products().items():
            products[(i * dim_b + j, k * dim_b + l)] = [
                (p * dim_b + q, c * d) for p, c in a_terms for q, d in b_terms]
    unit = [a * b for a in A.unit for b in B.unit]
    return GradedAlgebra(G, labels, degrees, products, unit, name=name or f"{A.name}⊗{B.name}")


def direct_sum(A: GradedAlgebra, B: GradedAlgebra, name: str = "") -> GradedAlgebra:
    if A.group != B.group:
        raise AlgebraShapeError(f"Direct sum needs a common group, got {A.group} and {B.group}")
    offset = A.dim
    products = dict(A.products())
    for (i, j), terms in B.products().items():
        products[(i + offset, j + offset)] = [(k + offset, c) for k, c in terms]
    labels = [f"{label}_1" for label in A.labels] + [f"{label}_2" for label in B.labels]
    return GradedAlgebra(A.group, labels, A.degrees + B.degrees, products, A.unit + B.unit,
                         name=name or f"{A.name}⊕{B.name}")


def direct_power(A: GradedAlgebra, k: int) -> GradedAlgebra:
    """A^(+k); copy c keeps A's labels suffixed with _c."""
    if k < 1:
        raise ValueError(f"Direct power needs k >= 1, got {k}")
    products = {}
    for copy in range(k):
        offset = copy * A.dim
        for (i, j), terms in A.products().items():
            products[(i + offset, j + offset)] = [(m + offset, c) for m, c in terms]
    labels = [f"{label}_{copy + 1}" for copy in range(k) for label in A.labels]
    return GradedAlgebra(A.group, labels, A.degrees * k, products, A.unit * k, name=f"{A.name}^{k}")


def from_presentation_example(which: str) -> GradedAlgebra:
    """The two 4-dimensional Z2-graded algebras on the basis 1, z, t, zt.

    "B": commutative, z even, t odd, z^2 = 0, t^2 = 1.
    "A2": z and t odd, zt = -tz, t^2 = 1, anything with z^2 vanishes.
    """
    G = GroupSpec((2,))
    labels = ["1", "z", "t", "zt"]
    words = [(0, 0), (1, 0), (0, 1), (1, 1)]  # exponents (a, b) of z^a t^b
    index = {w: i for i, w in enumerate(words)}
    if which == "B":
        degrees = [G.element((b,)) for _, b in words]
        sign = lambda b, a2: 1
    elif which == "A2":
        degrees = [G.element(((a + b) % 2,)) for a, b in words]
        sign = lambda b, a2: -1 if (b * a2) % 2 else 1
    else:
        raise ValueError(f"Unknown presentation example '{which}', expected 'B' or 'A2'")
    products = {}
    for (a, b), (a2, b2) in itertools.product(words, repeat=2):
        if a + a2 >= 2:
            continue
        product = (a + a2, (b + b2) % 2)
        products[(index[(a, b)], index[(a2, b2)])] = [(index[product], sign(b, a2))]
    return GradedAlgebra(G, labels, degrees, products, [1, 0, 0, 0], name=f"paper{which}")
