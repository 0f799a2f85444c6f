"""
Exact cyclotomic arithmetic for the regrade toolkit
Elements of Q(zeta_m) in the power basis modulo the m-th cyclotomic polynomial
"""

import cmath
import logging
import math
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from sympy import divisors, mobius, totient
from sympy.polys.densearith import dup_mul, dup_quo, dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert

logger = logging.getLogger(__name__)

Rational = type(QQ.one)


class CyclotomicZeroDivisionError(ZeroDivisionError):
    """Raised when inverting the zero element"""


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Tuple:
    """Phi_m as a dense coefficient tuple (highest degree first) over QQ.

    Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    """
    if m < 1:
        raise ValueError(f"Conductor must be >= 1, got {m}")
    numerator = [QQ.one] + [QQ.zero] * (m - 1) + [-QQ.one]
    for d in divisors(m):
        if d < m:
            numerator = dup_quo(numerator, list(cyclotomic_polynomial(d)), QQ)
    return tuple(numerator)


@lru_cache(maxsize=None)
def _degree(m: int) -> int:
    return int(totient(m))


@lru_cache(maxsize=None)
def _trace_weights(m: int) -> Tuple:
    # normalized trace of zeta_m^k to Q: mu(m/g) / phi(m/g), g = gcd(k, m)
    weights = []
    for k in range(_degree(m)):
        q = m // math.gcd(k, m)
        weights.append(QQ(int(mobius(q)), int(totient(q))))
    return tuple(weights)


def _reduce(m: int, dense: list) -> Tuple:
    """Reduce a dense polynomial mod Phi_m into canonical low-first coordinates."""
    phi = _degree(m)
    rem = dup_rem(dup_strip(dense), list(cyclotomic_polynomial(m)), QQ)
    coeffs = [QQ.zero] * phi
    for power, c in enumerate(reversed(rem)):
        coeffs[power] = c
    return tuple(coeffs)


def _dense(coeffs: Sequence) -> list:
    return dup_strip(list(reversed(coeffs)))


class Cyclotomic:
    """Element of Q(zeta_m), immutable.

    coeffs are the coordinates in 1, zeta_m, ..., zeta_m^(phi(m)-1);
    binary operations first embed both operands into Q(zeta_lcm).
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Sequence):
        if len(coeffs) != _degree(conductor):
            raise ValueError(f"Q(zeta_{conductor}) needs {_degree(conductor)} coordinates, got {len(coeffs)}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(QQ.convert(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    # construction

    @classmethod
    def rational(cls, value, conductor: int = 1) -> 'Cyclotomic':
        coeffs = [QQ.zero] * _degree(conductor)
        coeffs[0] = QQ.convert(value)
        return cls(conductor, coeffs)

    @classmethod
    def zero(cls, conductor: int = 1) -> 'Cyclotomic':
        return cls.rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> 'Cyclotomic':
        return cls.rational(1, conductor)

    @classmethod
    def from_dense(cls, conductor: int, dense: list) -> 'Cyclotomic':
        return cls(conductor, _reduce(conductor, dense))

    # conductor handling

    def embed(self, conductor: int) -> 'Cyclotomic':
        """Image under Q(zeta_m) -> Q(zeta_m'), zeta_m -> zeta_m'^(m'/m)."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"Q(zeta_{self.conductor}) does not embed in Q(zeta_{conductor})")
        step = conductor // self.conductor
        if _degree(self.conductor) == 1:
            return Cyclotomic.rational(self.coeffs[0], conductor)
        dense = [QQ.zero] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            dense[len(dense) - 1 - k * step] = c
        return Cyclotomic.from_dense(conductor, dense)

    def _align(self, other) -> Tuple['Cyclotomic', 'Cyclotomic']:
        other = _coerce(other, self.conductor)
        if other is None:
            return None, None
        if other.conductor == self.conductor:
            return self, other
        m = math.lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    # field operations

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        if len(a.coeffs) == 1:
            return Cyclotomic(a.conductor, (a.coeffs[0] * b.coeffs[0],))
        if not a or not b:
            return Cyclotomic.zero(a.conductor)
        return Cyclotomic.from_dense(a.conductor, dup_mul(_dense(a.coeffs), _dense(b.coeffs), QQ))

    __rmul__ = __mul__

    def invert(self) -> 'Cyclotomic':
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_m."""
        if not self:
            raise CyclotomicZeroDivisionError("Cannot invert zero in Q(zeta_%d)" % self.conductor)
        if len(self.coeffs) == 1:
            return Cyclotomic(self.conductor, (QQ.one / self.coeffs[0],))
        inverse = dup_invert(_dense(self.coeffs), list(cyclotomic_polynomial(self.conductor)), QQ)
        return Cyclotomic.from_dense(self.conductor, inverse)

    def __truediv__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a * b.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.invert()
            exponent = -exponent
        result = Cyclotomic.one(self.conductor)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> 'Cyclotomic':
        """Complex conjugate, i.e. the Galois image zeta -> zeta^(-1)."""
        m = self.conductor
        if len(self.coeffs) == 1:
            return self
        dense = [QQ.zero] * m
        for k, c in enumerate(self.coeffs):
            power = (-k) % m
            dense[m - 1 - power] += c
        return Cyclotomic.from_dense(m, dense)

    def norm_squared(self) -> 'Cyclotomic':
        return self * self.conjugate()

    # predicates

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not self

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_one(self) -> bool:
        return self.is_rational() and self.coeffs[0] == QQ.one

    def __eq__(self, other) -> bool:
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # normalized trace to Q does not depend on the conductor
        if len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash(sum((c * w for c, w in zip(self.coeffs, _trace_weights(self.conductor))), QQ.zero))

    def multiplicative_order(self) -> Optional[int]:
        """Order as a root of unity, searching d <= 2 m^2; None if not a root of unity."""
        if not self:
            return None
        bound = 2 * self.conductor * self.conductor
        power = self
        for d in range(1, bound + 1):
            if power.is_one():
                return d
            power = power * self
        return None

    # rendering

    def to_complex(self) -> complex:
        """Approximate complex value, for display only."""
        m = self.conductor
        return sum(float(c) * cmath.exp(2j * cmath.pi * k / m) for k, c in enumerate(self.coeffs) if c)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(_format_rational(c))
                continue
            base = f"zeta{self.conductor}" if k == 1 else f"zeta{self.conductor}^{k}"
            if c == QQ.one:
                terms.append(base)
            elif c == -QQ.one:
                terms.append(f"-{base}")
            else:
                terms.append(f"{_format_rational(c)}*{base}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {self})"

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }


def _format_rational(c) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _coerce(value, conductor: int) -> Optional[Cyclotomic]:
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, int) or QQ.of_type(value):
        return Cyclotomic.rational(value, conductor)
    return None


def zeta(m: int, k: int = 1) -> Cyclotomic:
    """zeta_m^k reduced modulo Phi_m"""
    if m < 1:
        raise ValueError(f"Conductor must be >= 1, got {m}")
    k %= m
    dense = [QQ.one] + [QQ.zero] * k
    return Cyclotomic.from_dense(m, dense)


def invert(a: Cyclotomic) -> Cyclotomic:
    return a.invert()


def is_root_of_unity(a: Cyclotomic) -> Optional[int]:
    return a.multiplicative_order()


def as_cyclotomic(value, conductor: int = 1) -> Cyclotomic:
    coerced = _coerce(value, conductor)
    if coerced is None:
        raise TypeError(f"Cannot interpret {value!r} as a cyclotomic number")
    return coerced.embed(math.lcm(coerced.conductor, conductor))


def from_json(data, conductor: int = 1) -> Cyclotomic:
    """Decode a scalar: integer, "p/q" string, {"zeta": [m, k]} or the canonical object"""
    if isinstance(data, bool):
        raise ValueError(f"Booleans are not scalars: {data!r}")
    if isinstance(data, int):
        return Cyclotomic.rational(data, conductor)
    if isinstance(data, str):
        num, _, den = data.partition('/')
        try:
            return Cyclotomic.rational(QQ(int(num), int(den or 1)), conductor)
        except ValueError:
            raise ValueError(f"Cannot read scalar {data!r}")
    if isinstance(data, list) and len(data) == 2:
        return Cyclotomic.rational(QQ(int(data[0]), int(data[1])), conductor)
    if isinstance(data, dict):
        if "zeta" in data:
            m, k = data["zeta"]
            return as_cyclotomic(zeta(int(m), int(k)), conductor)
        if "conductor" in data and "coeffs" in data:
            coeffs = [QQ(int(num), int(den)) for num, den in data["coeffs"]]
            return as_cyclotomic(Cyclotomic(int(data["conductor"]), coeffs), conductor)
    raise ValueError(f"Cannot read scalar {data!r}")


def common_conductor(values) -> int:
    m = 1
    for v in values:
        if isinstance(v, Cyclotomic):
            m = math.lcm(m, v.conductor)
    return m

