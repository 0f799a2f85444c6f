"""
Command handlers for the regrade CLI
One method per verb; each returns the process exit code
"""

import json
import logging
import sys
from typing import Dict, List, Optional, TextIO

import algebra
import identities
import pairing
import regularity
import verification
from config import get_max_n, get_state_cap
from utils import ReportFormatter, SpecParser, ValidationUtils

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3

REGULAR_ACTIONS = ("check", "matrix", "structure", "criterion")
DEFAULT_CODIM_N = 3


class CommandHandlers:
    def __init__(self, out: Optional[TextIO] = None, err: Optional[TextIO] = None,
                 output_format: str = "text", decimal: bool = False):
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.json_output = output_format == "json"
        self.formatter = ReportFormatter(decimal=decimal)
        self.parser = SpecParser()
        self.validator = ValidationUtils()

    def _emit(self, data: Dict, lines: List[str]):
        if self.json_output:
            self.out.write(self.formatter.dumps(data) + "\n")
        else:
            self.out.write("\n".join(lines) + "\n")

    def _input_error(self, command: str, e: Exception) -> int:
        logger.error(f"Error in {command}: {e}")
        kind = "JSON error" if isinstance(e, json.JSONDecodeError) else type(e).__name__
        self.err.write(f"❌ {command}: {kind}: {e}\n")
        return EXIT_INPUT_ERROR

    # group

    def group_info(self, args) -> int:
        """Handle `group info <moduli>`"""
        try:
            G = self.validator.validate_group_text(args.moduli)
        except ValueError as e:
            return self._input_error("group info", e)
        data = self.formatter.group_info(G)
        lines = [
            f"Group: {G}",
            f"Order: {G.order}",
            f"Exponent: {G.exponent}",
            f"Elements: {' '.join(str(g) for g in G.elements)}",
            f"Elements of order 2: {data['involutions']}",
            f"Sum of all elements: {tuple(data['sum_of_elements'])}",
        ]
        self._emit(data, lines)
        return EXIT_OK

    # pairing

    def pairing_check(self, args) -> int:
        """Handle `pairing check <file|builtin>`"""
        try:
            table = self.parser.parse_pairing(args.pairing)
        except (pairing.InvalidBicharacterError, pairing.InvalidCocycleError) as e:
            self._emit({"valid": False, "error": str(e)}, [f"❌ Invalid: {e}"])
            return EXIT_FALSE
        except (ValueError, OSError) as e:
            return self._input_error("pairing check", e)

        beta = table if isinstance(table, pairing.Bicharacter) else pairing.induced_bicharacter(table)
        report = pairing.is_minimal(beta)
        data = {
            "valid": True,
            "kind": table.kind,
            "group": table.group.to_json(),
            "table": [[self.formatter.scalar_json(x) for x in row] for row in table.table],
            "bicharacter": [[self.formatter.scalar_json(x) for x in row] for row in beta.table],
            "det": self.formatter.scalar_json(report.det),
            "minimal": report.minimal,
            "radical": [g.to_json() for g in pairing.radical(beta)],
            "alternating": beta.is_alternating(),
        }
        lines = [f"✅ Valid {table.kind} on {table.group}", "Decomposition matrix:",
                 self.formatter.matrix(beta.table), f"det = {self.formatter.scalar(report.det)}",
                 f"Radical: {' '.join(str(g) for g in pairing.radical(beta))}",
                 f"Minimal: {report.minimal}"]
        if report.equal_columns_witness:
            g, h = report.equal_columns_witness
            lines.append(f"Equal columns: {g} and {h}")
            data["equal_columns"] = [g.to_json(), h.to_json()]
        if isinstance(table, pairing.Cocycle):
            q0 = pairing.regular_elements(table)
            data["regular_elements"] = [g.to_json() for g in q0]
            lines.append(f"Regular elements: {' '.join(str(g) for g in q0)}")
        self._emit(data, lines)
        return EXIT_OK

    # algebra

    def _load_algebra(self, spec: str) -> algebra.GradedAlgebra:
        return self.parser.parse_algebra(spec)

    def algebra_validate(self, args) -> int:
        """Handle `algebra validate <spec>`"""
        try:
            A = self._load_algebra(args.spec)
        except algebra.AlgebraValidationError as e:
            self._emit({"valid": False, "error": str(e)}, [f"❌ Invalid: {e}"])
            return EXIT_FALSE
        except (ValueError, OSError) as e:
            return self._input_error("algebra validate", e)
        components = {str(g): len(A.component_indices(g)) for g in A.group.elements}
        data = {
            "valid": True,
            "name": A.name,
            "group": A.group.to_json(),
            "dim": A.dim,
            "components": components,
            "support": [g.to_json() for g in A.support()],
            "full_support": A.has_full_support(),
            "commutative": A.is_commutative(),
        }
        lines = [f"✅ {A.name} is a valid {A.group}-graded algebra of dimension {A.dim}",
                 "Components: " + ", ".join(f"{g}: {d}" for g, d in components.items()),
                 f"Full support: {A.has_full_support()}", f"Commutative: {A.is_commutative()}"]
        self._emit(data, lines)
        return EXIT_OK

    def algebra_radical(self, args) -> int:
        """Handle `algebra radical <spec>`"""
        try:
            A = self._load_algebra(args.spec)
        except (ValueError, OSError) as e:
            return self._input_error("algebra radical", e)
        J = A.jacobson_radical()
        report = A.radical_grading_report()
        data = {
            "dim": A.dim,
            "radical": [[self.formatter.scalar_json(c) for c in row] for row in J],
            "radical_labels": self.formatter.vectors(A, J),
            **report.to_json(),
        }
        lines = [f"J({A.name}) has dimension {len(J)}"]
        lines += [f"  {v}" for v in self.formatter.vectors(A, J)]
        lines += [f"Graded: {report.is_graded}", f"dim J(A_0) = {report.j0_dim}",
                  f"J(A_0) = A_0 ∩ J(A): {report.identity_holds}"]
        self._emit(data, lines)
        return EXIT_OK if report.is_graded and report.identity_holds else EXIT_FALSE

    def algebra_export(self, args) -> int:
        """Handle `algebra export <spec> [--output path]`"""
        try:
            A = self._load_algebra(args.spec)
            text = ReportFormatter.dumps(A.to_json())
            if args.output:
                with open(args.output, "w", encoding="utf-8") as handle:
                    handle.write(text + "\n")
                logger.info(f"✅ Exported {A.name} to {args.output}")
            else:
                self.out.write(text + "\n")
        except (ValueError, OSError) as e:
            return self._input_error("algebra export", e)
        return EXIT_OK

    # regularity

    def regular(self, args) -> int:
        """Handle `regular [check|matrix|structure|criterion] <spec>`"""
        if len(args.words) not in (1, 2):
            return self._input_error("regular", ValueError("Expected [action] <spec>"))
        action, spec = (args.words[0], args.words[1]) if len(args.words) == 2 else ("report", args.words[0])
        if action not in REGULAR_ACTIONS + ("report",):
            return self._input_error("regular", ValueError(f"Unknown action '{action}'"))
        try:
            state_cap = self.validator.validate_positive(args.state_cap, "--state-cap") or get_state_cap()
            A = self._load_algebra(spec)
            if action == "check":
                return self._regular_check(A, state_cap)
            if action == "matrix":
                return self._regular_matrix(A)
            if action == "structure":
                return self._regular_structure(A, state_cap)
            if action == "criterion":
                return self._regular_criterion(A)
            return self._regular_report(A, state_cap)
        except (ValueError, OSError) as e:
            return self._input_error(f"regular {action}", e)

    def _verdict_lines(self, A, verdict: regularity.RegularityVerdict) -> List[str]:
        ci = verdict.condition_i
        lines = [f"Algebra: {A.name} (dim {A.dim}) over {A.group}",
                 f"Full support: {verdict.full_support}",
                 f"Condition (i): {ci.status.value} ({ci.states_explored} states)"]
        if ci.failing_tuple:
            lines.append(f"  vanishing product along {' '.join(str(g) for g in ci.failing_tuple)}")
        cii = verdict.condition_ii
        lines.append(f"Condition (ii): {'holds' if cii.holds else 'fails'}")
        if cii.witness:
            lines.append(f"  witness pair: {cii.witness[0]}, {cii.witness[1]}")
        if cii.indeterminate_pair:
            lines.append(f"  all products vanish between {cii.indeterminate_pair[0]} and {cii.indeterminate_pair[1]}")
        decided = "undecided" if not verdict.decided else verdict.regular
        lines.append(f"Regular: {decided}")
        return lines

    def _verdict_exit(self, verdict: regularity.RegularityVerdict) -> int:
        if not verdict.decided:
            return EXIT_OK
        return EXIT_OK if verdict.regular else EXIT_FALSE

    def _regular_check(self, A, state_cap: int) -> int:
        verdict = regularity.is_regular(A, state_cap)
        self._emit(verdict.to_json(), self._verdict_lines(A, verdict))
        return self._verdict_exit(verdict)

    def _matrix_lines(self, report: regularity.DecompositionReport) -> List[str]:
        lines = ["Decomposition matrix:", self.formatter.matrix(report.matrix),
                 f"det = {self.formatter.scalar(report.det)}",
                 f"Minimal: {report.minimal}",
                 f"Radical: {' '.join(str(g) for g in report.radical)}",
                 f"Exponent prediction: {report.exp_prediction if report.exp_prediction else 'none'}"]
        if not report.condition_ii_holds:
            lines.append("Note: computed from the candidate bicharacter; condition (ii) fails")
        return lines

    def _matrix_json(self, report: regularity.DecompositionReport) -> Dict:
        data = report.to_json()
        data["matrix"] = [[self.formatter.scalar_json(x) for x in row] for row in report.matrix]
        data["det"] = self.formatter.scalar_json(report.det)
        return data

    def _regular_matrix(self, A) -> int:
        report = regularity.decomposition_report(A)
        self._emit(self._matrix_json(report), self._matrix_lines(report))
        return EXIT_OK if report.minimal else EXIT_FALSE

    def _regular_structure(self, A, state_cap: int) -> int:
        try:
            report = regularity.verify_structure_theorem(A, state_cap)
        except regularity.PreconditionError as e:
            self._emit({"applicable": False, "reason": str(e)}, [f"❌ {e}"])
            return EXIT_FALSE
        lines = [f"k = {report.k}, dim A = {report.dim_a}, dim A_0 = {report.dim_a0}, "
                 f"dim J(A) = {report.dim_j}, dim J(A_0) = {report.dim_j0}, |G| = {report.group_order}",
                 f"A_0 local: {report.a0_local}"]
        for clause in report.clauses:
            mark = "n/a" if clause.holds is None else ("✅" if clause.holds else "❌")
            lines.append(f"({clause.name}) {mark} {clause.detail}")
        self._emit(report.to_json(), lines)
        return EXIT_OK if report.holds else EXIT_FALSE

    def _regular_criterion(self, A) -> int:
        report = regularity.twisted_group_criterion(A)
        data = report.to_json()
        lines = [f"{key}: {value}" for key, value in data.items()]
        self._emit(data, lines)
        return EXIT_OK if report.consistent else EXIT_FALSE

    def _regular_report(self, A, state_cap: int) -> int:
        verdict = regularity.is_regular(A, state_cap)
        data = verdict.to_json()
        lines = self._verdict_lines(A, verdict)
        minimal = None
        if verdict.full_support and verdict.condition_ii.indeterminate_pair is None:
            try:
                report = regularity.decomposition_report(A)
            except regularity.PreconditionError as e:
                lines.append(f"No decomposition matrix: {e}")
            else:
                minimal = report.minimal
                data.update({k: v for k, v in self._matrix_json(report).items() if k != "condition_ii_holds"})
                lines += self._matrix_lines(report)
        if not verdict.decided:
            return self._finish(data, lines, EXIT_OK)
        return self._finish(data, lines, EXIT_OK if verdict.regular and minimal else EXIT_FALSE)

    def _finish(self, data: Dict, lines: List[str], code: int) -> int:
        self._emit(data, lines)
        return code

    # identities

    def codim(self, args) -> int:
        """Handle `codim <spec> [--max-n N] [--ordinary] [--tuples all|nonzero] [--exponent]`"""
        try:
            cap = get_max_n()
            n_max = self.validator.validate_positive(args.max_n, "--max-n") or min(DEFAULT_CODIM_N, cap)
            A = self._load_algebra(args.spec)
            reports = [identities.graded_codimension(A, n, max_n=cap, ordinary=args.ordinary)
                       for n in range(1, n_max + 1)]
            estimate = identities.exponent_estimate(A, n_max, max_n=cap) if args.exponent else None
        except (ValueError, OSError) as e:
            return self._input_error("codim", e)
        nonzero = args.tuples == "nonzero"
        data = {"algebra": A.name, "group_order": A.group.order,
                "codimensions": [r.to_json(nonzero_only=nonzero) for r in reports]}
        lines = [f"Codimensions of {A.name} over {A.group}", "n  graded  ordinary  |G|^n"]
        for r in reports:
            ordinary = "-" if r.ordinary_codim is None else str(r.ordinary_codim)
            lines.append(f"{r.n}  {r.graded_codim}  {ordinary}  {A.group.order ** r.n}")
        if estimate is not None:
            data["exponent"] = estimate.to_json()
            roots = ", ".join(estimate.to_json()["nth_roots"])
            lines.append(f"nth roots: {roots}; predicted exponent: {estimate.predicted or 'none'}")
        self._emit(data, lines)
        return EXIT_OK

    # verification

    def verify(self, args) -> int:
        """Handle `verify <suite|all|slow>`"""
        try:
            if args.suite == "all":
                results = verification.run_all(include_slow=False)
            elif args.suite == "slow":
                results = [verification.run_suite(name) for name in verification.SLOW_SUITES]
            else:
                results = [verification.run_suite(args.suite)]
        except ValueError as e:
            return self._input_error("verify", e)
        data = {"passed": all(r.passed for r in results), "suites": [r.to_json() for r in results]}
        lines = [self.formatter.check_table([(r.name, r.passed) for r in results])]
        for r in results:
            for c in r.checks:
                if not c.passed:
                    lines.append(f"  {r.name}: {c.description}: {c.detail}")
        self._emit(data, lines)
        return EXIT_OK if data["passed"] else EXIT_FALSE
