"""
CLI module for clawfree
Command line interface for constructions, claw analysis and verification campaigns
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, NoReturn, Optional

# Add colorama for cross-platform colored terminal output
try:
    from colorama import Fore, Style, init

    init()
    HAS_COLORAMA = True
except ImportError:
    # Fallback if colorama is not installed
    HAS_COLORAMA = False

    class Fore:
        GREEN = YELLOW = BLUE = CYAN = RED = MAGENTA = WHITE = ""

    class Style:
        BRIGHT = DIM = RESET_ALL = ""


from .analysis.claws import max_claw
from .analysis.graphs import graph_analysis
from .analysis.lines import line_profile
from .constructions.families import build_family
from .core.config import (
    CampaignKind,
    CommandConfig,
    EnumSpec,
    ExitCode,
    FamilySpec,
    MatroidClass,
    OutputFormat,
    log_level_from_env,
)
from .core.errors import CapacityError, ClawfreeError, InputError
from .enumeration.enumerator import MatroidEnumerator
from .graphs.graph import GRAPH_HEADER, SimpleGraph, parse_graph, serialize_graph
from .matroids.io import parse_matroid, serialize_matroid
from .matroids.operations import validate
from .reporting.render import f_table_rows, g_table_rows, render
from .reporting.schemas import AnalysisReport
from .verification.campaign_runner import CampaignRunner, exit_code_for

logger = logging.getLogger(__name__)

VERIFY_ACTIONS = {
    "bound": CampaignKind.BOUND,
    "lowrank": CampaignKind.LOWRANK,
    "graph": CampaignKind.GRAPH,
    "trianglefree": CampaignKind.TRIANGLE_FREE,
}


class ClawArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 64"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = ClawArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
        help="Report format",
    )
    common.add_argument(
        "--out", dest="out_path", help="Output file (directory for enumerate)"
    )
    common.add_argument(
        "--shards", type=int, help="Worker processes (default: CPU count)"
    )
    common.add_argument(
        "--budget-seconds",
        type=float,
        help="Stop and report incomplete after this long",
    )
    common.add_argument(
        "--timing", action="store_true", help="Record runtime in reports"
    )
    common.add_argument(
        "--artifacts-dir", default="artifacts", help="Where counterexample files go"
    )
    common.add_argument(
        "-v", "--verbose", action="store_true", help="Enable verbose logging"
    )
    return common


def _campaign_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--class", dest="matroid_class", choices=[c.value for c in MatroidClass]
    )
    parser.add_argument("--r", type=int, help="Rank")
    parser.add_argument("--t", type=int, help="Claw parameter")
    parser.add_argument("--n", type=int, help="Vertex count")
    parser.add_argument("--n-max", type=int, help="Largest ground set scanned")
    parser.add_argument("--size-cap", type=int, help="Largest matroid scanned")
    parser.add_argument("--seed", type=int, default=0, help="Random seed")
    parser.add_argument("--trials", type=int, default=10_000, help="Random trials")


def create_argument_parser() -> argparse.ArgumentParser:
    """Create and configure argument parser"""
    common = _common_options()
    parser = ClawArgumentParser(
        prog="clawfree",
        description=(
            "clawfree - claw-free matroids and graphs: "
            "constructions, analysis and verification"
        ),
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    commands = parser.add_subparsers(dest="subcommand", required=True)

    construct = commands.add_parser(
        "construct", parents=[common], help="Build a named matroid or graph"
    )
    construct.add_argument(
        "--family", required=True, help="e.g. pg:4, ag:3, mrt:5,2, cc:3,3+1, gnt:9,2"
    )

    analyze = commands.add_parser(
        "analyze", parents=[common], help="Analyse a matroid or graph file"
    )
    analyze.add_argument(
        "--in", dest="in_path", required=True, help="Matroid or graph file"
    )
    analyze.add_argument("--claws", action="store_true", help="Maximum claws")
    analyze.add_argument("--lines", action="store_true", help="Line profile")
    analyze.add_argument(
        "--validate", action="store_true", help="Check stored invariants"
    )

    verify = commands.add_parser(
        "verify", parents=[common], help="Run a verification campaign"
    )
    verify.add_argument("action", choices=sorted(VERIFY_ACTIONS) + ["suite"])
    verify.add_argument("--plan", dest="plan_path", help="YAML plan for verify suite")
    _campaign_options(verify)

    prop = commands.add_parser(
        "property", parents=[common], help="Randomized property checks"
    )
    prop.add_argument("action", choices=["contract"])
    _campaign_options(prop)

    tables = commands.add_parser(
        "tables", parents=[common], help="Size function tables"
    )
    tables.add_argument("action", choices=["f", "g"])
    tables.add_argument("--r-max", type=int, default=6)
    tables.add_argument("--t-max", type=int, default=3)
    tables.add_argument("--n-max", type=int, default=12)

    enum = commands.add_parser(
        "enumerate", parents=[common], help="Spool an enumeration to files"
    )
    enum.add_argument(
        "--class",
        dest="matroid_class",
        required=True,
        choices=[c.value for c in MatroidClass],
    )
    enum.add_argument("--r", type=int, required=True, help="Rank")
    enum.add_argument("--n-max", type=int, required=True, help="Largest ground set")
    enum.add_argument("--size-cap", type=int, help="Size bound")
    enum.add_argument(
        "--triangle-free", action="store_true", help="Only triangle-free matroids"
    )
    enum.add_argument(
        "--loopless",
        action="store_true",
        help="Bases class: loopless instead of simple",
    )

    return parser


def create_command_config(args: argparse.Namespace) -> CommandConfig:
    """Create command configuration from arguments"""
    analyses = tuple(
        name for name in ("claws", "lines", "validate") if getattr(args, name, False)
    )
    values = {
        "subcommand": args.subcommand,
        "action": getattr(args, "action", None),
        "family": getattr(args, "family", None),
        "matroid_class": getattr(args, "matroid_class", None),
        "r": getattr(args, "r", None),
        "t": getattr(args, "t", None),
        "n": getattr(args, "n", None),
        "n_max": getattr(args, "n_max", None),
        "size_cap": getattr(args, "size_cap", None),
        "in_path": getattr(args, "in_path", None),
        "out_path": args.out_path,
        "artifacts_dir": args.artifacts_dir,
        "output_format": args.output_format,
        "shards": args.shards,
        "seed": getattr(args, "seed", None),
        "trials": getattr(args, "trials", None),
        "budget_seconds": args.budget_seconds,
        "timing": args.timing,
        "plan_path": getattr(args, "plan_path", None),
        "r_max": getattr(args, "r_max", None),
        "t_max": getattr(args, "t_max", None),
        "triangle_free": getattr(args, "triangle_free", False),
        "loopless": getattr(args, "loopless", False),
        "analyses": analyses or ("claws",),
    }
    return CommandConfig(**{k: v for k, v in values.items() if v is not None})


def print_colored(text: str, color: str = Fore.WHITE, style: str = "") -> None:
    """Print colored status text on stderr"""
    print(f"{style}{color}{text}{Style.RESET_ALL}", file=sys.stderr)


def emit(text: str, out_path: Optional[str]) -> None:
    """Write output to a file, or to stdout"""
    if out_path:
        path = Path(out_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


def _status(code: int, message: str) -> None:
    colors = {ExitCode.OK: Fore.GREEN, ExitCode.MISMATCH: Fore.RED}
    color = colors.get(code, Fore.YELLOW)
    print_colored(message, color, Style.BRIGHT)


def cmd_construct(config: CommandConfig) -> int:
    spec = FamilySpec.parse(config.family)
    obj = build_family(spec)
    if isinstance(obj, SimpleGraph):
        text = serialize_graph(obj)
        summary = f"{spec}: graph on {obj.n} vertices, {obj.edge_count()} edges"
    else:
        text = serialize_matroid(obj)
        summary = f"{spec}: rank {obj.rank} on {obj.n} elements"
    emit(text, config.out_path)
    print_colored(summary, Fore.CYAN)
    return ExitCode.OK


def cmd_analyze(config: CommandConfig) -> int:
    try:
        text = Path(config.in_path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {config.in_path}: {e}")
    report = AnalysisReport()
    if text.split()[:1] == [GRAPH_HEADER]:
        report.graph = graph_analysis(parse_graph(text))
        emit(render(report, config.output_format), config.out_path)
        return ExitCode.OK

    checking = "validate" in config.analyses
    M = parse_matroid(text, validate=not checking)
    if checking:
        report.validation = validate(M)
        if not report.validation.valid:
            print_colored(
                f"{config.in_path} is not a valid matroid; skipping other analyses",
                Fore.YELLOW,
            )
            emit(render(report, config.output_format), config.out_path)
            return ExitCode.OK
    if "claws" in config.analyses:
        report.claws = max_claw(M, shards=config.shards)
    if "lines" in config.analyses:
        report.lines = line_profile(M)
    emit(render(report, config.output_format), config.out_path)
    return ExitCode.OK


def _runner(config: CommandConfig) -> CampaignRunner:
    return CampaignRunner(
        shards=config.shards,
        budget_seconds=config.budget_seconds,
        timing=config.timing,
        artifacts_dir=config.artifacts_dir,
    )


def cmd_verify(config: CommandConfig) -> int:
    runner = _runner(config)
    if config.action == "suite":
        if not config.plan_path:
            raise InputError("verify suite needs --plan")
        report = runner.run_plan(runner.load_plan(config.plan_path))
        label = f"suite {report.plan}"
    else:
        report = runner.run(config.campaign_config(VERIFY_ACTIONS[config.action]))
        label = f"{report.campaign}: {report.verdict}"
    emit(render(report, config.output_format), config.out_path)
    code = exit_code_for(report)
    _status(code, f"{label} (exit {code})")
    return code


def cmd_property(config: CommandConfig) -> int:
    report = _runner(config).run(config.campaign_config(CampaignKind.CONTRACT))
    emit(render(report, config.output_format), config.out_path)
    code = exit_code_for(report)
    _status(code, f"{report.name}: {len(report.failures)} failures (exit {code})")
    return code


def cmd_tables(config: CommandConfig) -> int:
    if config.action == "f":
        rows = f_table_rows(config.r_max, config.t_max)
    else:
        rows = g_table_rows(config.n_max, config.t_max)
    emit(render(rows, config.output_format), config.out_path)
    return ExitCode.OK


def cmd_enumerate(config: CommandConfig) -> int:
    spec = EnumSpec(
        config.matroid_class,
        rank=config.r,
        n_max=config.n_max,
        size_bound=config.size_cap,
        require_simple=not config.loopless,
    )
    enumerator = MatroidEnumerator(
        spec,
        triangle_free=config.triangle_free,
        loopless_only=True,
        shards=config.shards,
    )
    manifest = enumerator.spool(config.out_path or "enumeration")
    sys.stdout.write(render(manifest, OutputFormat.JSON))
    print_colored(f"{manifest.count} matroids in {manifest.records_file}", Fore.CYAN)
    return ExitCode.OK


COMMANDS: Dict[str, Callable[[CommandConfig], int]] = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "property": cmd_property,
    "tables": cmd_tables,
    "enumerate": cmd_enumerate,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code"""
    parser = create_argument_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ExitCode.OK

    # Configure logging level
    logging.basicConfig(format="%(levelname)s: %(message)s")
    level = logging.DEBUG if args.verbose else log_level_from_env()
    logging.getLogger().setLevel(level)

    try:
        config = create_command_config(args)
        return COMMANDS[config.subcommand](config)
    except InputError as e:
        parser.print_usage(sys.stderr)
        print_colored(f"error: {e}", Fore.RED)
        return ExitCode.USAGE
    except CapacityError as e:
        print_colored(f"capacity exceeded: {e}", Fore.YELLOW)
        return ExitCode.INCOMPLETE
    except KeyboardInterrupt:
        print_colored("Operation cancelled by user.", Fore.RED)
        return ExitCode.ERROR
    except ClawfreeError as e:
        logger.error(f"{e}")
        return ExitCode.ERROR
    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        if args.verbose:
            import traceback

            traceback.print_exc()
        return ExitCode.ERROR


def main() -> None:
    """Main entry point for the CLI"""
    sys.exit(run())


if __name__ == "__main__":
    main()
