"""
Command-line front end for regrade
Builds the argument parser and dispatches verbs to CommandHandlers
"""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from handlers import EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR, CommandHandlers

logger = logging.getLogger(__name__)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="report format")
    common.add_argument("--decimal", action="store_true", help="add approximate complex values to scalars")
    return common


def create_parser() -> argparse.ArgumentParser:
    """Create the parser with one subcommand per verb"""
    common = _common_options()
    parser = argparse.ArgumentParser(prog="regrade", description="Regular gradings on finite-dimensional algebras")
    verbs = parser.add_subparsers(dest="verb", required=True)

    group = verbs.add_parser("group", help="finite abelian groups")
    group_actions = group.add_subparsers(dest="action", required=True)
    info = group_actions.add_parser("info", parents=[common], help="order, exponent and element sum")
    info.add_argument("moduli", help="e.g. 2x2 or Z4xZ2; 1 for the trivial group")
    info.set_defaults(handler="group_info")

    pairing = verbs.add_parser("pairing", help="bicharacters and cocycles")
    pairing_actions = pairing.add_subparsers(dest="action", required=True)
    check = pairing_actions.add_parser("check", parents=[common], help="validate and report minimality")
    check.add_argument("pairing", help="JSON file or builtin (grassmann, pauli:n, standard:n[,k], carry:n[,c])")
    check.set_defaults(handler="pairing_check")

    algebra = verbs.add_parser("algebra", help="graded algebras")
    algebra_actions = algebra.add_subparsers(dest="action", required=True)
    for action, help_text in (("validate", "check grading, unit and associativity"),
                              ("radical", "Jacobson radical and its grading"),
                              ("export", "write the algebra as JSON")):
        sub = algebra_actions.add_parser(action, parents=[common], help=help_text)
        sub.add_argument("spec", help="JSON file or builtin algebra")
        sub.set_defaults(handler=f"algebra_{action}")
        if action == "export":
            sub.add_argument("--output", help="file to write instead of standard output")

    regular = verbs.add_parser("regular", parents=[common], help="regularity and decomposition matrix")
    regular.add_argument("words", nargs="+", metavar="[check|matrix|structure|criterion] spec")
    regular.add_argument("--state-cap", type=int, default=None, help="BFS state limit for condition (i)")
    regular.set_defaults(handler="regular")

    codim = verbs.add_parser("codim", parents=[common], help="graded codimensions")
    codim.add_argument("spec", help="JSON file or builtin algebra")
    codim.add_argument("--max-n", type=int, default=None, help="largest degree (default 3)")
    codim.add_argument("--ordinary", action="store_true", help="also compute ungraded codimensions")
    codim.add_argument("--tuples", choices=("all", "nonzero"), default="all", help="per-tuple ranks to report")
    codim.add_argument("--exponent", action="store_true", help="add nth roots and the predicted exponent")
    codim.set_defaults(handler="codim")

    verify = verbs.add_parser("verify", parents=[common], help="run the verification suites")
    verify.add_argument("suite", nargs="?", default="all", help="suite name, all, or slow")
    verify.set_defaults(handler="verify")
    return parser


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Parse argv, run one verb and return the exit code"""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

    handlers = CommandHandlers(out=out, err=err, output_format=args.format, decimal=args.decimal)
    try:
        code = getattr(handlers, args.handler)(args)
    except Exception as e:
        logger.exception(f"❌ Unhandled error in {args.verb}: {e}")
        handlers.err.write(f"❌ {args.verb}: internal error: {type(e).__name__}: {e}\n")
        return EXIT_INTERNAL_ERROR
    logger.info(f"✅ {args.verb} finished with exit code {code}")
    return code


if __name__ == "__main__":
    sys.exit(run())
