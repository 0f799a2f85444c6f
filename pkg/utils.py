"""
Utility functions for the regrade toolkit
Parses algebra and pairing specifications and formats reports
"""

import json
import logging
import re
from typing import Dict, List, Optional, Tuple

import algebra
import pairing
from algebra import GradedAlgebra
from group import GroupSpec, count_involutions, miller_sum, parse_moduli
from scalar import Cyclotomic, zeta

logger = logging.getLogger(__name__)


class SpecParseError(ValueError):
    """Raised when a builtin specification cannot be read"""

    def __init__(self, message: str, text: str, position: int = 0):
        super().__init__(f"{message} at position {position} in '{text}'")
        self.text = text
        self.position = position


def load_json(path: str):
    """Read a JSON file; decoding errors keep their line and column."""
    with open(path, encoding='utf-8') as handle:
        return json.load(handle)


def split_top_level(text: str, offset: int = 0) -> List[Tuple[str, int]]:
    """Split on commas outside parentheses; bare numbers rejoin the previous argument (local:1,1)."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth < 0:
                raise SpecParseError("Unbalanced ')'", text, offset + i)
        elif ch == ',' and depth == 0:
            parts.append((text[start:i], offset + start))
            start = i + 1
    if depth != 0:
        raise SpecParseError("Unbalanced '('", text, offset + len(text))
    parts.append((text[start:], offset + start))
    merged: List[Tuple[str, int]] = []
    for part, position in parts:
        if merged and re.fullmatch(r'\s*-?\d+\s*', part):
            previous, previous_position = merged[-1]
            merged[-1] = (f"{previous},{part.strip()}", previous_position)
        else:
            merged.append((part.strip(), position))
    return merged


class SpecParser:
    """Parse builtin names for algebras, cocycles and bicharacters"""

    INT_LIST = re.compile(r'^-?\d+(?:,-?\d+)*$')

    @classmethod
    def _ints(cls, text: str, source: str, position: int, count: Tuple[int, int]) -> List[int]:
        if not cls.INT_LIST.match(text):
            raise SpecParseError(f"Expected integers, got '{text}'", source, position)
        values = [int(v) for v in text.split(',')]
        low, high = count
        if not low <= len(values) <= high:
            raise SpecParseError(f"Expected {low}-{high} integers, got {len(values)}", source, position)
        return values

    @classmethod
    def parse_cocycle(cls, text: str, source: Optional[str] = None, position: int = 0) -> pairing.Cocycle:
        """pauliN | pauli:N | standard:n[,k] | trivial:<moduli> | carry:n[,c]"""
        source = source or text
        text = text.strip()
        match = re.fullmatch(r'pauli:?(\d+)', text)
        if match:
            n = int(match.group(1))
            return pairing.standard_cocycle(n, zeta(n, -1))
        name, _, args = text.partition(':')
        offset = position + len(name) + 1
        if name == 'standard':
            values = cls._ints(args, source, offset, (1, 2))
            n = values[0]
            k = values[1] if len(values) > 1 else 1
            return pairing.standard_cocycle(n, zeta(n, k))
        if name == 'trivial':
            return pairing.trivial_cocycle(parse_moduli(args))
        if name == 'carry':
            values = cls._ints(args, source, offset, (1, 2))
            return pairing.carry_cocycle(values[0], values[1] if len(values) > 1 else -1)
        if text.endswith('.json'):
            data = load_json(text)
            cocycle = pairing.pairing_from_json(data)
            if not isinstance(cocycle, pairing.Cocycle):
                raise SpecParseError("File does not hold a cocycle", source, position)
            return cocycle
        raise SpecParseError(f"Unknown cocycle '{text}'", source, position)

    @classmethod
    def parse_pairing(cls, text: str):
        """A bicharacter or cocycle: grassmann | pauli:n | trivial:<moduli> | standard:.. | carry:.. | file.json"""
        text = text.strip()
        if text == 'grassmann':
            return pairing.grassmann_bicharacter()
        if re.fullmatch(r'pauli:?\d+', text):
            return pairing.induced_bicharacter(cls.parse_cocycle(text))
        if text == 'trivial' or text.startswith('trivial:'):
            return pairing.trivial_bicharacter(parse_moduli(text.partition(':')[2]))
        if text.endswith('.json'):
            return pairing.pairing_from_json(load_json(text))
        return cls.parse_cocycle(text)

    @classmethod
    def parse_algebra(cls, text: str, source: Optional[str] = None, position: int = 0) -> GradedAlgebra:
        """Builtin algebra names, combinators and JSON files."""
        source = source or text
        text = text.strip()
        if not text:
            raise SpecParseError("Empty algebra specification", source, position)
        if text.endswith('.json'):
            return algebra.algebra_from_json(load_json(text))
        if text.endswith(')') and '(' in text:
            head, _, inner = text.partition('(')
            inner = inner[:-1]
            inner_position = position + len(head) + 1
            if head in ('tensor', 'dsum'):
                args = [cls.parse_algebra(part, source, pos) for part, pos in split_top_level(inner, inner_position)]
                if len(args) < 2:
                    raise SpecParseError(f"{head} needs at least two algebras", source, inner_position)
                combine = algebra.tensor_product if head == 'tensor' else algebra.direct_sum
                result = args[0]
                for arg in args[1:]:
                    result = combine(result, arg)
                return result
            if head.startswith('graded:'):
                G = parse_moduli(head[len('graded:'):])
                return algebra.regrade_trivially(cls.parse_algebra(inner, source, inner_position), G)
            raise SpecParseError(f"Unknown combinator '{head}'", source, position)
        if text in ('paperB', 'paperA2'):
            return algebra.from_presentation_example(text[len('paper'):])
        if text == 'trivial':
            return algebra.trivial_algebra()
        name, _, args = text.partition(':')
        offset = position + len(name) + 1
        if name == 'twisted':
            tau = cls.parse_cocycle(args, source, offset)
            return algebra.twisted_group_algebra(tau, name=f"K^tau({args})")
        if name == 'pauli':
            return algebra.pauli_matrix_algebra(cls._ints(args, source, offset, (1, 1))[0])
        if name == 'grassmann':
            return algebra.truncated_grassmann(cls._ints(args, source, offset, (1, 1))[0])
        if name == 'local':
            v, c = cls._ints(args, source, offset, (2, 2))
            return algebra.truncated_polynomial_local(v, c)
        raise SpecParseError(f"Unknown algebra '{text}'", source, position)


class ReportFormatter:
    """Render scalars and reports for output"""

    def __init__(self, decimal: bool = False):
        self.decimal = decimal

    def scalar(self, value: Cyclotomic) -> str:
        text = str(value)
        if self.decimal and not value.is_rational():
            z = value.to_complex()
            text += f" (≈ {z.real:.6f}{z.imag:+.6f}i)"
        return text

    def scalar_json(self, value: Cyclotomic) -> Dict:
        data = value.to_json()
        if self.decimal:
            z = value.to_complex()
            data["approximate"] = [round(z.real, 12), round(z.imag, 12)]
        return data

    @staticmethod
    def dumps(data) -> str:
        return json.dumps(data, indent=2, ensure_ascii=False)

    def matrix(self, rows) -> str:
        cells = [[self.scalar(x) for x in row] for row in rows]
        if not cells:
            return "(empty)"
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)

    def vectors(self, A: GradedAlgebra, rows) -> List[str]:
        lines = []
        for row in rows:
            terms = [f"({self.scalar(c)})*{label}" if not c.is_one() else label
                     for c, label in zip(row, A.labels) if c]
            lines.append(" + ".join(terms) or "0")
        return lines

    @staticmethod
    def group_info(G: GroupSpec) -> Dict:
        total, involutions = miller_sum(G)
        return {
            "group": str(G),
            "moduli": list(G.moduli),
            "order": G.order,
            "exponent": G.exponent,
            "elements": [g.to_json() for g in G.elements],
            "involutions": count_involutions(G),
            "sum_of_elements": total.to_json(),
        }

    @staticmethod
    def check_table(rows: List[Tuple[str, bool]]) -> str:
        width = max((len(name) for name, _ in rows), default=0)
        return "\n".join(f"{name.ljust(width)}  {'✅ pass' if ok else '❌ FAIL'}" for name, ok in rows)


class ValidationUtils:
    """Validation utilities for command-line input"""

    @staticmethod
    def validate_positive(value: Optional[int], name: str) -> Optional[int]:
        if value is None:
            return None
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")
        return value

    @staticmethod
    def validate_group_text(text: str) -> GroupSpec:
        return parse_moduli(text)
