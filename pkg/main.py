"""Command-line entry point for the Bass-Serre workbench."""
import argparse
import logging
import sys
from typing import Dict, List, Optional

from pydantic import ValidationError
from pythonjsonlogger import jsonlogger

from cli import EXIT_USAGE, CommandBase, get_all_commands, get_command_by_name, run
from config import settings
from models import RunConfig

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

logger = logging.getLogger(__name__)


def configure_logging(level: str, fmt: str) -> None:
    """Root logger on stderr; `json` switches to one JSON object per record."""
    handler = logging.StreamHandler(sys.stderr)
    if fmt == "json":
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(getattr(logging, level.upper(), logging.INFO))


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--radius", type=int, help="ball radius (default from DEFAULT_RADIUS)")
    common.add_argument("--fuel", type=int, help="rewrite step budget (default from REWRITE_FUEL)")
    common.add_argument("--k", type=int, help="cut weight, or grammar constant for the 3k bound")
    common.add_argument("--lambda", dest="lambda_", type=int, help="neighbourhood radius for blocks")
    common.add_argument("--margin", type=int, help="path window margin")
    common.add_argument("--depth", type=int, help="Bass-Serre tree depth")
    common.add_argument("--max-k", dest="max_k", type=int, help="largest cut weight enumerated")
    common.add_argument("--generators", help="comma-separated generator words, letters joined by '.'")
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    common.add_argument("--log-level", dest="log_level", help="override LOG_LEVEL")
    return common


def _add_command(subparsers, leaf: str, command: CommandBase, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(leaf, parents=[common], help=command.description, description=command.description)
    for argument in command.arguments:
        parser.add_argument(argument)
    parser.set_defaults(command=command.name)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="workbench",
        description="Rewriting, context-free groups, graphs of groups and cuts on Cayley balls",
    )
    common = _common_options()
    top = parser.add_subparsers(dest="section", required=True)
    groups: Dict[str, argparse._SubParsersAction] = {}
    for command in get_all_commands():
        head, _, leaf = command.name.partition(" ")
        if not leaf:
            _add_command(top, head, command, common)
            continue
        if head not in groups:
            group_parser = top.add_parser(head, help=f"{head} commands")
            groups[head] = group_parser.add_subparsers(dest="action", required=True)
        _add_command(groups[head], leaf, command, common)
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    command = get_command_by_name(args.command)
    return RunConfig(
        command=args.command,
        inputs=[getattr(args, a) for a in command.arguments],
        radius=args.radius,
        fuel=args.fuel,
        k=args.k,
        lambda_=args.lambda_,
        margin=args.margin,
        depth=args.depth,
        max_k=args.max_k,
        generators=None if args.generators is None else [g.strip() for g in args.generators.split(",")],
        format=args.format,
        seed=args.seed,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or settings.LOG_LEVEL, settings.LOG_FORMAT)
    logger.debug(f"🚀 {args.command} {sys.argv[1:] if argv is None else argv}")
    try:
        config = to_config(args)
    except ValidationError as e:
        for problem in e.errors():
            field = ".".join(str(p) for p in problem["loc"])
            sys.stderr.write(f"error: --{field.replace('_', '-')}: {problem['msg']}\n")
        return EXIT_USAGE
    status = run(config)
    logger.debug(f"🏁 {args.command} exited with {status}")
    return status


if __name__ == "__main__":
    sys.exit(main())
