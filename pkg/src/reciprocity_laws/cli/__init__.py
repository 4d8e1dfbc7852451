"""命令行入口: reciprocity [global options] <command> [options] <functions...>

以负号开头的表达式需放在 ``--`` 之后, 例如 ``check-weil -- "-t" "1-t"``.
"""

import sys
from typing import Any
from argparse import ArgumentParser

import msgspec
from loguru import logger

from .data import Diagnostic, CommandConfig, CommandReport
from .data import SurveySummary as SurveySummary
from .expr import parse_ast as parse_ast
from .expr import parse_expr as parse_expr
from .specs import parse_flag as parse_flag
from .specs import parse_field as parse_field
from .specs import parse_place as parse_place
from .commands import Commands
from ..config import Config, pconfig
from ..renders import get_renderer
from ..constants import LawEnum, ChartEnum, RenderType
from ..exception import ExpressionException, ReciprocityException

SCHEMA_COMMAND = "schema"

OPTIONS: dict[str, tuple[str, dict[str, Any]]] = {
    "place": ("--place", {"help": "a polynomial in t, or inf"}),
    "flag": ("--flag", {"help": "curve=<y - s(x) | x - s(y)>;point=<place>;chart=<chart>"}),
    "oracle": ("--oracle", {"action": "store_true", "help": "also compose the boundary maps and compare"}),
    "curve": ("--curve", {"help": "y - s(x) or x - s(y)"}),
    "point": ("--point", {"help": "affine point <x>,<y>"}),
    "chart": ("--chart", {"default": ChartEnum.XY.value, "choices": [c.value for c in ChartEnum]}),
    "law": ("--law", {"choices": [law.value for law in LawEnum]}),
    "count": ("--count", {"type": int, "default": 10, "help": "number of random instances"}),
}


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="reciprocity", description="exact reciprocity laws on P^1 and P^1 x P^1")
    parser.add_argument("--field", default="q", help="q, fp:<p>, fq:<p>^<d>, eps2(<base>) or eps3(<base>)")
    parser.add_argument("--format", default=RenderType.json.value, choices=[r.value for r in RenderType])
    parser.add_argument("--seed", type=int, default=pconfig.seed)
    parser.add_argument("--spot-checks", type=int, default=pconfig.spot_checks)
    parser.add_argument("--workers", type=int, default=pconfig.max_workers)
    parser.add_argument("--log-level", default=pconfig.log_level)

    commands = parser.add_subparsers(dest="command", required=True)
    for spec in Commands.get_specs():
        sub = commands.add_parser(spec.name, help=spec.help)
        for option in spec.options:
            flag, kwargs = OPTIONS[option]
            sub.add_argument(flag, **kwargs)
        if spec.functions:
            sub.add_argument("functions", nargs=spec.functions, metavar="function")
    commands.add_parser(SCHEMA_COMMAND, help="print the JSON schema of the reports")
    return parser


def report_schema() -> dict[str, Any]:
    return msgspec.json.schema(CommandReport)


def _diagnostic(e: ReciprocityException) -> Diagnostic:
    return Diagnostic(
        kind=type(e).__name__,
        message=e.message,
        line=getattr(e, "line", None),
        column=getattr(e, "column", None),
    )


def run_command(cfg: CommandConfig, config: Config | None = None) -> tuple[int, CommandReport]:
    """执行一条子命令, 返回 (退出码, 报告)

    退出码: 0 计算成功或检查通过, 1 检查失败或计算出错, 2 输入错误
    """
    config = config or pconfig
    try:
        domain = parse_field(cfg.field)
        report = Commands(domain, cfg, config).run()
    except ExpressionException as e:
        logger.error(f"{cfg.command}: {e.message}")
        return 2, CommandReport(command=cfg.command, field=cfg.field, inputs=cfg.functions, error=_diagnostic(e))
    except ReciprocityException as e:
        logger.exception(f"{cfg.command} failed: {e.message}")
        return 1, CommandReport(command=cfg.command, field=cfg.field, inputs=cfg.functions, error=_diagnostic(e))
    except Exception as e:
        logger.exception(f"{cfg.command} crashed: {e}")
        error = Diagnostic(kind=type(e).__name__, message=str(e))
        return 1, CommandReport(command=cfg.command, field=cfg.field, inputs=cfg.functions, error=error)
    return (0 if report.succeeded else 1), report


def _setup_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level.upper())


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    _setup_logging(args.log_level)
    if args.command == SCHEMA_COMMAND:
        sys.stdout.write(msgspec.json.format(msgspec.json.encode(report_schema()), indent=2).decode() + "\n")
        return 0

    cfg = CommandConfig(
        command=args.command,
        field=args.field,
        functions=list(getattr(args, "functions", None) or []),
        place=getattr(args, "place", None),
        flag=getattr(args, "flag", None),
        curve=getattr(args, "curve", None),
        point=getattr(args, "point", None),
        chart=getattr(args, "chart", ChartEnum.XY.value),
        oracle=getattr(args, "oracle", False),
        law=getattr(args, "law", None),
        count=getattr(args, "count", 10),
        format=RenderType(args.format),
    )
    config = pconfig.model_copy(
        update={
            "reciprocity_seed": args.seed,
            "reciprocity_spot_checks": args.spot_checks,
            "reciprocity_max_workers": args.workers,
            "reciprocity_log_level": args.log_level,
        }
    )
    status, report = run_command(cfg, config)
    sys.stdout.write(get_renderer(cfg.format).render(report) + "\n")
    return status
