"""
Finite abelian groups for the regrade toolkit
Handles groups given as products of cyclic factors Z_n1 x ... x Z_nk
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

logger = logging.getLogger(__name__)


class GroupShapeError(ValueError):
    """Raised when an element does not fit the group it is used with"""


@dataclass(frozen=True, order=True)
class GroupElement:
    residues: Tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.residues) + ")"

    def to_json(self) -> List[int]:
        return list(self.residues)


@dataclass(frozen=True)
class GroupSpec:
    """Z_{n1} x ... x Z_{nk}; the empty product is the trivial group.

    Factors are kept as given, never reduced to invariant factors, so the
    encoding of elements stays stable across files and reports.
    """
    moduli: Tuple[int, ...] = ()

    def __post_init__(self):
        moduli = tuple(int(n) for n in self.moduli)
        for n in moduli:
            if n < 1:
                raise GroupShapeError(f"Cyclic factor must have order >= 1, got {n}")
        object.__setattr__(self, 'moduli', moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.moduli) if self.moduli else 1

    @property
    def zero(self) -> GroupElement:
        return GroupElement((0,) * self.rank)

    @cached_property
    def elements(self) -> Tuple[GroupElement, ...]:
        """Canonical lexicographic enumeration; zero comes first."""
        return tuple(GroupElement(r) for r in itertools.product(*(range(n) for n in self.moduli)))

    @cached_property
    def _index(self) -> Dict[GroupElement, int]:
        return {g: i for i, g in enumerate(self.elements)}

    def element(self, residues: Sequence[int]) -> GroupElement:
        """Build the canonical element with the given residues (reduced mod n_i)"""
        residues = tuple(residues)
        if len(residues) != self.rank:
            raise GroupShapeError(
                f"Element {residues} has {len(residues)} coordinates, group {self} has {self.rank}")
        return GroupElement(tuple(int(r) % n for r, n in zip(residues, self.moduli)))

    def check(self, g: GroupElement) -> GroupElement:
        if len(g.residues) != self.rank:
            raise GroupShapeError(f"Element {g} does not belong to {self}")
        for r, n in zip(g.residues, self.moduli):
            if not 0 <= r < n:
                raise GroupShapeError(f"Element {g} is not canonical in {self}")
        return g

    def index_of(self, g: GroupElement) -> int:
        try:
            return self._index[g]
        except KeyError:
            self.check(g)
            raise

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self.check(a)
        self.check(b)
        return GroupElement(tuple((x + y) % n for x, y, n in zip(a.residues, b.residues, self.moduli)))

    def neg(self, a: GroupElement) -> GroupElement:
        self.check(a)
        return GroupElement(tuple((-x) % n for x, n in zip(a.residues, self.moduli)))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.add(a, self.neg(b))

    def scale(self, k: int, a: GroupElement) -> GroupElement:
        self.check(a)
        return GroupElement(tuple((k * x) % n for x, n in zip(a.residues, self.moduli)))

    def sum(self, items) -> GroupElement:
        total = self.zero
        for g in items:
            total = self.add(total, g)
        return total

    def element_order(self, a: GroupElement) -> int:
        self.check(a)
        order = 1
        for x, n in zip(a.residues, self.moduli):
            order = math.lcm(order, n // math.gcd(x, n))
        return order

    def direct_product(self, other: 'GroupSpec') -> 'GroupSpec':
        """G x H; a trivial factor collapses automatically."""
        return GroupSpec(self.moduli + other.moduli)

    def pair(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """Element (g, h) of self x other, by concatenating residues."""
        return GroupElement(g.residues + h.residues)

    def split(self, gh: GroupElement) -> Tuple[GroupElement, GroupElement]:
        """Inverse of pair() for an element of self x other."""
        return GroupElement(gh.residues[:self.rank]), GroupElement(gh.residues[self.rank:])

    def to_json(self) -> Dict:
        return {"moduli": list(self.moduli)}

    @classmethod
    def from_json(cls, data) -> 'GroupSpec':
        if isinstance(data, dict):
            data = data.get("moduli")
        if not isinstance(data, list) or not all(isinstance(n, int) for n in data):
            raise GroupShapeError(f"Expected a list of cyclic orders, got {data!r}")
        return cls(tuple(data))

    def element_from_json(self, data) -> GroupElement:
        if not isinstance(data, list):
            raise GroupShapeError(f"Expected a residue list, got {data!r}")
        return self.check(GroupElement(tuple(int(r) for r in data)))

    def __str__(self) -> str:
        if not self.moduli:
            return "1"
        return " x ".join(f"Z{n}" for n in self.moduli)


def add(a: GroupElement, b: GroupElement, G: GroupSpec) -> GroupElement:
    return G.add(a, b)


def enumerate_elements(G: GroupSpec) -> List[GroupElement]:
    return list(G.elements)


def exponent(G: GroupSpec) -> int:
    return G.exponent


def count_involutions(G: GroupSpec) -> int:
    """Number of elements of order exactly 2"""
    return math.prod(math.gcd(2, n) for n in G.moduli) - 1


def miller_sum(G: GroupSpec) -> Tuple[GroupElement, int]:
    """Sum of all elements of G (per-factor closed form) and the involution count.

    Each residue of Z_n occurs |G|/n times in its coordinate, so the
    coordinate sum is |G|(n-1)/2 mod n.
    """
    order = G.order
    total = GroupElement(tuple((order * (n - 1) // 2) % n for n in G.moduli))
    return total, count_involutions(G)


def miller_sum_bruteforce(G: GroupSpec) -> Tuple[GroupElement, int]:
    total = G.sum(G.elements)
    involutions = sum(1 for g in G.elements if G.element_order(g) == 2)
    return total, involutions


def parse_moduli(text: str) -> GroupSpec:
    """Parse '2x2', 'Z4xZ2', '3' or '1' (trivial) into a GroupSpec"""
    cleaned = text.strip().lower().replace('z', '').replace('*', 'x').replace(',', 'x')
    if cleaned in ('', '1', 'trivial'):
        return GroupSpec(())
    try:
        return GroupSpec(tuple(int(part) for part in cleaned.split('x')))
    except ValueError:
        raise GroupShapeError(f"Cannot read group '{text}'")
