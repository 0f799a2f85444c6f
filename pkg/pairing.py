"""
Bicharacters and 2-cocycles for the regrade toolkit
Handles validity laws, induced bicharacters, radicals and minimality of decompositions
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import linalg
import scalar
from group import GroupElement, GroupSpec
from scalar import Cyclotomic, zeta

logger = logging.getLogger(__name__)


class InvalidBicharacterError(ValueError):
    """Raised when a table violates the bicharacter laws"""


class InvalidCocycleError(ValueError):
    """Raised when a table violates the cocycle identity"""


class MinimalityDisagreementError(RuntimeError):
    """Raised when radical, column and determinant tests of minimality disagree"""


def _square_table(G: GroupSpec, table, kind: str) -> Tuple[Tuple[Cyclotomic, ...], ...]:
    size = G.order
    rows = tuple(tuple(scalar.as_cyclotomic(x) for x in row) for row in table)
    if len(rows) != size or any(len(row) != size for row in rows):
        raise ValueError(f"A {kind} on {G} needs a {size}x{size} table")
    conductor = scalar.common_conductor(x for row in rows for x in row)
    return tuple(tuple(x.embed(conductor) for x in row) for row in rows)


class _PairingTable:
    kind = ""

    def __init__(self, group: GroupSpec, table, validate: bool = True):
        self.group = group
        self.table = _square_table(group, table, self.kind)
        self.conductor = scalar.common_conductor(x for row in self.table for x in row)
        if validate:
            self.validate()

    def __call__(self, g: GroupElement, h: GroupElement) -> Cyclotomic:
        return self.table[self.group.index_of(g)][self.group.index_of(h)]

    def matrix(self) -> List[List[Cyclotomic]]:
        return [list(row) for row in self.table]

    def validate(self):
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        if not isinstance(other, _PairingTable):
            return NotImplemented
        return self.kind == other.kind and self.group == other.group and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.kind, self.group, self.table))

    def to_json(self) -> Dict:
        return {
            "group": self.group.to_json(),
            "kind": self.kind,
            "table": [[x.to_json() for x in row] for row in self.table],
        }


class Bicharacter(_PairingTable):
    """beta: G x G -> K*, skew and multiplicative in each argument.

    The table, indexed by the canonical enumeration of G, is the
    decomposition matrix of any algebra with this bicharacter.
    """
    kind = "bicharacter"

    def validate(self):
        G = self.group
        elements = G.elements
        exponent = G.exponent
        for g, h in itertools.product(elements, repeat=2):
            value = self(g, h)
            if not value:
                raise InvalidBicharacterError(f"beta({g},{h}) is zero")
            if not (value ** exponent).is_one():
                raise InvalidBicharacterError(
                    f"beta({g},{h}) = {value} is not a root of unity of order dividing {exponent}")
            if value * self(h, g) != 1:
                raise InvalidBicharacterError(f"beta({g},{h}) != beta({h},{g})^-1")
        for g, h, k in itertools.product(elements, repeat=3):
            if self(G.add(g, k), h) != self(g, h) * self(k, h):
                raise InvalidBicharacterError(f"beta is not multiplicative in the left argument at ({g},{k};{h})")
            if self(g, G.add(h, k)) != self(g, h) * self(g, k):
                raise InvalidBicharacterError(f"beta is not multiplicative in the right argument at ({g};{h},{k})")

    def is_alternating(self) -> bool:
        return all(self(g, g).is_one() for g in self.group.elements)


class Cocycle(_PairingTable):
    """tau: G x G -> K* with tau(g,h+k)tau(h,k) = tau(g+h,k)tau(g,h)."""
    kind = "cocycle"

    def validate(self):
        G = self.group
        for g, h in itertools.product(G.elements, repeat=2):
            if not self(g, h):
                raise InvalidCocycleError(f"tau({g},{h}) is zero")
        for g, h, k in itertools.product(G.elements, repeat=3):
            lhs = self(g, G.add(h, k)) * self(h, k)
            rhs = self(G.add(g, h), k) * self(g, h)
            if lhs != rhs:
                raise InvalidCocycleError(f"Cocycle identity fails at ({g},{h},{k})")

    def is_symmetric(self) -> bool:
        return all(self(g, h) == self(h, g) for g, h in itertools.product(self.group.elements, repeat=2))


@dataclass(frozen=True)
class MinimalityReport:
    radical_trivial: bool
    has_equal_columns: bool
    det: Cyclotomic
    equal_columns_witness: Optional[Tuple[GroupElement, GroupElement]] = None

    @property
    def minimal(self) -> bool:
        return self.radical_trivial


def bicharacter_from_table(G: GroupSpec, table) -> Bicharacter:
    return Bicharacter(G, table)


def bicharacter_from_generators(G: GroupSpec, B: Sequence[Sequence]) -> Bicharacter:
    """Unique bimultiplicative extension of the values B[i][j] = beta(e_i, e_j)."""
    k = G.rank
    gens = [[scalar.as_cyclotomic(x) for x in row] for row in B]
    if len(gens) != k or any(len(row) != k for row in gens):
        raise InvalidBicharacterError(f"Generator matrix for {G} must be {k}x{k}")
    for i, j in itertools.product(range(k), repeat=2):
        value = gens[i][j]
        if not value:
            raise InvalidBicharacterError(f"Generator value at ({i},{j}) is zero")
        if not (value ** G.moduli[i]).is_one() or not (value ** G.moduli[j]).is_one():
            raise InvalidBicharacterError(
                f"Generator value {value} at ({i},{j}) is incompatible with Z{G.moduli[i]} x Z{G.moduli[j]}")
        if gens[j][i] * value != 1:
            raise InvalidBicharacterError(f"Generator values at ({i},{j}) and ({j},{i}) are not inverse")
    conductor = scalar.common_conductor(x for row in gens for x in row)
    table = []
    for g in G.elements:
        row = []
        for h in G.elements:
            value = Cyclotomic.one(conductor)
            for i, j in itertools.product(range(k), repeat=2):
                exponent = g.residues[i] * h.residues[j]
                if exponent:
                    value = value * gens[i][j] ** exponent
            row.append(value)
        table.append(row)
    return Bicharacter(G, table)


def trivial_bicharacter(G: GroupSpec) -> Bicharacter:
    return Bicharacter(G, [[1] * G.order for _ in range(G.order)])


def grassmann_bicharacter() -> Bicharacter:
    """The Z2 bicharacter of the Grassmann algebra: beta(1,1) = -1."""
    return bicharacter_from_generators(GroupSpec((2,)), [[-1]])


def bicharacter_family(G: GroupSpec) -> List[Bicharacter]:
    """Every bicharacter coming from a root-of-unity generator matrix."""
    e = G.exponent
    k = G.rank
    diagonal_options = []
    for n in G.moduli:
        options = [Cyclotomic.one(e)]
        if n % 2 == 0:
            options.append(zeta(e, e // 2))
        diagonal_options.append(options)
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    off_options = []
    for i, j in pairs:
        d = math.gcd(G.moduli[i], G.moduli[j])
        off_options.append([zeta(e, t * (e // d)) for t in range(d)])
    family = []
    for diag in itertools.product(*diagonal_options):
        for off in itertools.product(*off_options):
            B = [[Cyclotomic.one(e)] * k for _ in range(k)]
            for i in range(k):
                B[i][i] = diag[i]
            for (i, j), value in zip(pairs, off):
                B[i][j] = value
                B[j][i] = value.invert()
            family.append(bicharacter_from_generators(G, B))
    logger.debug(f"Generated {len(family)} bicharacters on {G}")
    return family


def cocycle_from_table(G: GroupSpec, table) -> Cocycle:
    return Cocycle(G, table)


def trivial_cocycle(G: GroupSpec) -> Cocycle:
    return Cocycle(G, [[1] * G.order for _ in range(G.order)])


def standard_cocycle(n: int, xi: Optional[Cyclotomic] = None) -> Cocycle:
    """tau((a,b),(c,d)) = xi^(b*c) on Z_n x Z_n; xi defaults to zeta_n."""
    if n < 1:
        raise InvalidCocycleError(f"Standard cocycle needs n >= 1, got {n}")
    xi = zeta(n, 1) if xi is None else scalar.as_cyclotomic(xi)
    if not (xi ** n).is_one():
        raise InvalidCocycleError(f"xi = {xi} is not an n-th root of unity for n = {n}")
    G = GroupSpec((n, n))
    table = [[xi ** (g.residues[1] * h.residues[0]) for h in G.elements] for g in G.elements]
    return Cocycle(G, table)


def carry_cocycle(n: int, c=-1) -> Cocycle:
    """tau(a,b) = c when a + b wraps around n, else 1 (X_1^n = c X_0 in K^tau Z_n)."""
    c = scalar.as_cyclotomic(c)
    if not c:
        raise InvalidCocycleError("Carry value must be nonzero")
    G = GroupSpec((n,))
    one = Cyclotomic.one(c.conductor)
    table = [[c if g.residues[0] + h.residues[0] >= n else one for h in G.elements] for g in G.elements]
    return Cocycle(G, table)


def induced_bicharacter(tau: Cocycle) -> Bicharacter:
    """beta(g,h) = tau(g,h) tau(h,g)^-1"""
    G = tau.group
    table = [[tau(g, h) / tau(h, g) for h in G.elements] for g in G.elements]
    try:
        return Bicharacter(G, table)
    except InvalidBicharacterError as e:
        raise RuntimeError(f"Valid cocycle induced an invalid bicharacter: {e}")


def radical(beta: Bicharacter) -> List[GroupElement]:
    """{k : beta(x,k) = 1 for all x}, in enumeration order."""
    G = beta.group
    return [k for k in G.elements if all(beta(x, k).is_one() for x in G.elements)]


def regular_elements(tau: Cocycle) -> List[GroupElement]:
    """Q_0(tau) = {x : tau(x,s) = tau(s,x) for all s}."""
    G = tau.group
    return [x for x in G.elements if all(tau(x, s) == tau(s, x) for s in G.elements)]


def det_decomposition_matrix(beta: Bicharacter) -> Cyclotomic:
    return linalg.determinant(beta.matrix())


def equal_columns(beta: Bicharacter) -> Optional[Tuple[GroupElement, GroupElement]]:
    """First pair g < h with beta(x,g) = beta(x,h) for every x, if any."""
    G = beta.group
    columns = [tuple(beta(x, h) for x in G.elements) for h in G.elements]
    for i, j in itertools.combinations(range(G.order), 2):
        if columns[i] == columns[j]:
            return G.elements[i], G.elements[j]
    return None


def is_minimal(beta: Bicharacter) -> MinimalityReport:
    """Radical, column and determinant tests of minimality; they must agree."""
    radical_trivial = radical(beta) == [beta.group.zero]
    witness = equal_columns(beta)
    det = det_decomposition_matrix(beta)
    verdicts = (radical_trivial, witness is None, bool(det))
    if len(set(verdicts)) != 1:
        raise MinimalityDisagreementError(
            f"Minimality tests disagree on {beta.group}: radical={verdicts[0]}, "
            f"columns={verdicts[1]}, det={det}")
    return MinimalityReport(radical_trivial=radical_trivial, has_equal_columns=witness is not None,
                            det=det, equal_columns_witness=witness)


def pairing_from_json(data):
    """Decode {"group", "kind", "table"} or the generator shorthand."""
    if not isinstance(data, dict):
        raise ValueError(f"Expected a pairing object, got {type(data).__name__}")
    G = GroupSpec.from_json(data.get("group", {"moduli": []}))
    kind = data.get("kind", "bicharacter")
    if kind not in ("bicharacter", "cocycle"):
        raise ValueError(f"Unknown pairing kind '{kind}'")
    key = "generators" if "generators" in data else "table"
    if key not in data:
        raise ValueError("Pairing object needs a 'table' or 'generators' entry")
    if key == "generators" and kind != "bicharacter":
        raise ValueError("Generator shorthand is only defined for bicharacters")
    try:
        rows = [[scalar.from_json(x) for x in row] for row in data[key]]
    except (TypeError, ValueError) as e:
        raise ValueError(f"Malformed '{key}': {e}")
    if key == "generators":
        return bicharacter_from_generators(G, rows)
    if kind == "bicharacter":
        return Bicharacter(G, rows)
    return Cocycle(G, rows)
