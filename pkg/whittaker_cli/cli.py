import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence

from commons.constants import (
    CASE_SETS, CMD_CLASSIFY, CMD_COSETS, CMD_DEGENERATE, CMD_GOLDEN, CMD_ORBIT, CMD_POLARIZE, CMD_STABILIZER,
    EXIT_ERROR, EXIT_GOLDEN_MISMATCH, EXIT_OK, KEY_ALGEBRA, KEY_DETAIL, KEY_ERROR, MSG_COMMAND_FAILED,
)
from commons.errors import OrbitMethodError, ParseError
from commons.utils import dumps
from whittaker_cli.commands import (
    cmd_classify, cmd_cosets, cmd_degenerate, cmd_orbit, cmd_polarize, cmd_stabilizer,
)
from whittaker_cli.config_manager import DEFAULT_CONFIG_FILE, ConfigManager
from whittaker_cli.golden import cmd_golden
from whittaker_cli.parsing import load_arguments_file, split_arguments

logger = logging.getLogger(__name__)

FUNCTIONAL_COMMANDS = (CMD_ORBIT, CMD_CLASSIFY, CMD_POLARIZE, CMD_STABILIZER, CMD_DEGENERATE)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whittaker",
        description="Coadjoint orbits, polarizations and Levi stabilizers of unipotent radicals, in exact arithmetic",
    )
    parser.add_argument("--json", action="store_true", help="compact canonical JSON output (default)")
    parser.add_argument("--pretty", action="store_true", help="indented JSON output")
    parser.add_argument("--config", default=DEFAULT_CONFIG_FILE, help="JSON configuration file")
    parser.add_argument("--verbose", action="store_true", help="log at INFO on standard error")
    parser.add_argument("--debug", action="store_true", help="log at DEBUG on standard error")
    subparsers = parser.add_subparsers(dest="command", required=True)

    helps = {
        CMD_ORBIT: "orbit dimension, stabilizer, canonical form and depth of a functional",
        CMD_CLASSIFY: "depth classification and metaplectic degree bound",
        CMD_POLARIZE: "Vergne polarization (flag=...) or certificates of a subalgebra (h=...)",
        CMD_STABILIZER: "Levi stabilizer of the orbit of a functional",
        CMD_DEGENERATE: "horizontal degeneration certificate (psi0=..., lambda=...) or cocharacter search",
    }
    for name in FUNCTIONAL_COMMANDS:
        sub = subparsers.add_parser(name, help=helps[name])
        sub.add_argument("algebra", nargs="?", help="catalog name such as gl_upper:4, sp:3, heis:2, or JSON")
        sub.add_argument("arguments", nargs="*", help="functional, then key=value arguments")
        sub.add_argument("--file", help="JSON object holding the arguments")
        if name == CMD_DEGENERATE:
            sub.add_argument("--bound", type=int, help="entry bound B of the cocharacter search box [-B, B]")

    cosets = subparsers.add_parser(CMD_COSETS, help="double-coset representatives for GL_n")
    cosets.add_argument("n", type=int)

    golden = subparsers.add_parser(CMD_GOLDEN, help="run a golden case set against stored expectations")
    golden.add_argument("case_set", help=", ".join(CASE_SETS))
    return parser


def _collect_arguments(args: argparse.Namespace) -> Dict[str, str]:
    """Merge --file values with the command line; the command line wins"""
    values = load_arguments_file(args.file) if args.file else {}
    positional, assignments = split_arguments(args.arguments)
    if args.algebra is not None:
        values[KEY_ALGEBRA] = args.algebra
    if positional:
        values["psi"] = positional[0]
    if len(positional) > 1:
        raise ParseError("arguments", f"unexpected positional arguments {positional[1:]}")
    values.update(assignments)
    for required in (KEY_ALGEBRA, "psi"):
        if required not in values:
            raise ParseError(required, "missing")
    return values


def run_command(args: argparse.Namespace, config: ConfigManager) -> List:
    """Dispatch one parsed command line to its command, returning the reports it produced"""
    if args.command == CMD_GOLDEN:
        return cmd_golden(args.case_set, config)
    if args.command == CMD_COSETS:
        return [cmd_cosets(args.n)]
    values = _collect_arguments(args)
    algebra, psi = values[KEY_ALGEBRA], values["psi"]
    if args.command == CMD_ORBIT:
        return [cmd_orbit(algebra, psi)]
    if args.command == CMD_CLASSIFY:
        return [cmd_classify(algebra, psi, values.get("h"))]
    if args.command == CMD_POLARIZE:
        return [cmd_polarize(algebra, psi, values.get("flag"), values.get("h"))]
    if args.command == CMD_STABILIZER:
        return [cmd_stabilizer(algebra, psi)]
    bound = args.bound if args.bound is not None else config.get_cocharacter_bound()
    return [cmd_degenerate(algebra, psi, values.get("psi0"), values.get("lambda"), bound)]


def _log_level(args: argparse.Namespace, config: ConfigManager) -> int:
    if args.debug:
        return logging.DEBUG
    if args.verbose:
        return logging.INFO
    return getattr(logging, config.get_log_level(), logging.WARNING)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse the command line, run the command and print its report JSON on standard output"""
    args = build_parser().parse_args(argv)
    config = ConfigManager(args.config)
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=_log_level(args, config),
        stream=sys.stderr,
    )
    indent = config.get_pretty_indent() if args.pretty else None
    try:
        reports = run_command(args, config)
    except OrbitMethodError as e:
        logger.error(MSG_COMMAND_FAILED.format(command=args.command, error=e))
        print(dumps({KEY_ERROR: type(e).__name__, KEY_DETAIL: str(e)}, indent))
        return EXIT_ERROR

    if args.command == CMD_GOLDEN:
        print(dumps([report.to_dict() for report in reports], indent))
    else:
        print(dumps(reports[0].to_dict(), indent))
    if not all(report.match for report in reports):
        return EXIT_GOLDEN_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
